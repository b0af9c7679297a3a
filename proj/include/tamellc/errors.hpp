#pragma once

#include <stdexcept>
#include <string>

namespace tamellc {

// Every library failure carries a stable kind name so reports and the CLI can
// classify it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define TAMELLC_ERROR(Name)                                                   \
    struct Name : Error {                                                     \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    }

TAMELLC_ERROR(InvalidParams);
TAMELLC_ERROR(PoleAtPoint);
TAMELLC_ERROR(OutOfRange);
TAMELLC_ERROR(NoConsistentModel);
TAMELLC_ERROR(NoGenerator);
TAMELLC_ERROR(TooLarge);
TAMELLC_ERROR(NotInSubgroup);
TAMELLC_ERROR(ExtensionObstruction);
TAMELLC_ERROR(PrecisionTooLow);
TAMELLC_ERROR(BruteForceUnsupported);
TAMELLC_ERROR(RingModelRequired);
TAMELLC_ERROR(UsageError);

#undef TAMELLC_ERROR

}  // namespace tamellc
