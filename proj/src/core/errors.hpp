// Exception hierarchy for the eichlerkit core.
#pragma once

#include <stdexcept>
#include <string>

namespace eichler {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (group specs, presentations, catalog files, config).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Loaded data failed a declared consistency check (e.g. order mismatch).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// A configured resource cap (order, degree, node budget, memory) was hit.
class ResourceExceeded : public Error {
public:
    explicit ResourceExceeded(const std::string& what) : Error(what) {}
};

// Coset enumeration exceeded its coset allowance without closing.
class EnumerationOverflow : public ResourceExceeded {
public:
    explicit EnumerationOverflow(const std::string& what) : ResourceExceeded(what) {}
};

// An operation's precondition does not hold for the given group
// (e.g. a 2-group classifier applied to a group of odd order).
class NotApplicable : public Error {
public:
    explicit NotApplicable(const std::string& what) : Error(what) {}
};

// A family passed as "closed under quotients" has a member with an
// admissible quotient that the family is missing.
class NotQuotientClosed : public NotApplicable {
public:
    explicit NotQuotientClosed(const std::string& what) : NotApplicable(what) {}
};

// A 2-group classifier was applied to a group whose order is not a power of 2.
class NotATwoGroup : public NotApplicable {
public:
    explicit NotATwoGroup(const std::string& what) : NotApplicable(what) {}
};

// A classifier requiring a C2 x C2 quotient was applied to a group whose
// abelianization has at most one even invariant factor.
class NoC22Quotient : public NotApplicable {
public:
    explicit NoC22Quotient(const std::string& what) : NotApplicable(what) {}
};

// A classifier for groups with periodic cohomology was applied to a group
// containing C_p x C_p for some prime p.
class NotPeriodic : public NotApplicable {
public:
    explicit NotPeriodic(const std::string& what) : NotApplicable(what) {}
};

// Internal invariant violation; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace eichler
