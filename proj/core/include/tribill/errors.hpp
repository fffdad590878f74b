#ifndef TRIBILL_ERRORS_HPP
#define TRIBILL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tribill {

// Domain errors: the caller handed us input the mathematics rejects.
// Internal errors: an invariant the library itself is responsible for broke.
// The CLI maps the former to exit code 2 and the latter to exit code 3.

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct non_positive_entry : domain_error {
    explicit non_positive_entry(const std::string& msg) : domain_error(msg) {}
};

struct not_coprime : domain_error {
    explicit not_coprime(const std::string& msg) : domain_error(msg) {}
};

struct no_singular_target : domain_error {
    explicit no_singular_target(const std::string& msg) : domain_error(msg) {}
};

struct invalid_puncture : domain_error {
    explicit invalid_puncture(const std::string& msg) : domain_error(msg) {}
};

struct invalid_angles : domain_error {
    explicit invalid_angles(const std::string& msg) : domain_error(msg) {}
};

struct inconsistent_gluing : internal_error {
    explicit inconsistent_gluing(const std::string& msg) : internal_error(msg) {}
};

struct trichotomy_violation : internal_error {
    explicit trichotomy_violation(const std::string& msg) : internal_error(msg) {}
};

struct map_inconsistent : internal_error {
    explicit map_inconsistent(const std::string& msg) : internal_error(msg) {}
};

} // namespace tribill

#endif
