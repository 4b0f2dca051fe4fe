#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

// Base class for every domain error thrown by this library. The concrete
// type name is prepended to the message so CLI output names the violated
// rule without extra bookkeeping.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

#define NSG_ERROR_TYPE(Name)                                  \
    class Name : public Error {                               \
    public:                                                   \
        explicit Name(const std::string& what_arg = "")       \
            : Error(std::string(#Name) +                      \
                    (what_arg.empty() ? "" : ": " + what_arg)) {} \
    }

// multiset / polynomial kernels
NSG_ERROR_TYPE(ContainmentViolation);
NSG_ERROR_TYPE(NegativeExponent);
NSG_ERROR_TYPE(NegativeCoefficient);
NSG_ERROR_TYPE(DegreeOverflow);

// semigroup validation
NSG_ERROR_TYPE(NonPositiveGenerator);
NSG_ERROR_TYPE(DuplicateGenerator);
NSG_ERROR_TYPE(NotCoprime);
NSG_ERROR_TYPE(NotMinimal);
NSG_ERROR_TYPE(InputTooLarge);

// identity machinery
NSG_ERROR_TYPE(InternalInconsistency);
NSG_ERROR_TYPE(NotMember);
NSG_ERROR_TYPE(PairingBroken);
NSG_ERROR_TYPE(NotPseudosymmetric3D);
NSG_ERROR_TYPE(SymmetricInput);
NSG_ERROR_TYPE(ParityViolation);
NSG_ERROR_TYPE(NotMed);
NSG_ERROR_TYPE(BadParameters);
NSG_ERROR_TYPE(PreconditionFailed);

#undef NSG_ERROR_TYPE

}  // namespace nsg
