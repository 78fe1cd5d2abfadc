#pragma once

#include <stdexcept>
#include <string>

namespace fibalg {

/// A chain operation received a value outside Z[τ].
class NotDirichletInteger : public std::domain_error {
public:
    explicit NotDirichletInteger(const std::string& what) : std::domain_error(what) {}
};

/// A value is not a point of the chain in question.
class NotInChain : public std::domain_error {
public:
    explicit NotInChain(const std::string& what) : std::domain_error(what) {}
};

/// A gap between consecutive points is neither τ nor 1+τ.
class UnexpectedGap : public std::domain_error {
public:
    explicit UnexpectedGap(const std::string& what) : std::domain_error(what) {}
};

/// A truncated product was evaluated on a generator outside the index window.
class IndexOutsideWindow : public std::out_of_range {
public:
    explicit IndexOutsideWindow(const std::string& what) : std::out_of_range(what) {}
};

/// Unknown verification suite name.
class UnknownSuite : public std::invalid_argument {
public:
    explicit UnknownSuite(const std::string& what) : std::invalid_argument(what) {}
};

/// An algebra spec violates its validity predicate and falsification mode is off.
class InvalidAlgebra : public std::invalid_argument {
public:
    explicit InvalidAlgebra(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fibalg
