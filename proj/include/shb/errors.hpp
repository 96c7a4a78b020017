#pragma once

#include <stdexcept>
#include <string>

namespace shb {

// Input that violates an operation's precondition (bad interval type, malformed complex, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input for which the mathematics cannot give a certified answer
// (near-spectral times, undecidable pi comparisons, oversize oracle instances).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotTamarkinClass : public ValidationError {
public:
    explicit NotTamarkinClass(const std::string& what) : ValidationError("not Tamarkin-class: " + what) {}
};

class UnsupportedCombination : public ValidationError {
public:
    explicit UnsupportedCombination(const std::string& what) : ValidationError("unsupported interval combination: " + what) {}
};

class NearSpectralValue : public DomainError {
public:
    explicit NearSpectralValue(const std::string& what) : DomainError("near spectral value: " + what) {}
};

class IndeterminateComparison : public DomainError {
public:
    explicit IndeterminateComparison(const std::string& what) : DomainError("indeterminate comparison: " + what) {}
};

class InstanceTooLarge : public DomainError {
public:
    explicit InstanceTooLarge(const std::string& what) : DomainError("instance too large: " + what) {}
};

} // namespace shb
