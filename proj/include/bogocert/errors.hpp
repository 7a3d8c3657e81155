#ifndef BOGOCERT_ERRORS_HPP
#define BOGOCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bogocert {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorCategory { parse, domain, io, limit, internal };

inline const char* category_name(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::parse: return "parse";
        case ErrorCategory::domain: return "domain";
        case ErrorCategory::io: return "io";
        case ErrorCategory::limit: return "limit";
        case ErrorCategory::internal: return "internal";
    }
    return "internal";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, std::string module, const std::string& msg)
        : std::runtime_error("[" + std::string(category_name(cat)) + "/" + module + "] " + msg),
          category_(cat), module_(std::move(module)) {}

    ErrorCategory category() const { return category_; }
    const std::string& module() const { return module_; }

private:
    ErrorCategory category_;
    std::string module_;
};

[[noreturn]] inline void throw_domain(const std::string& module, const std::string& msg) {
    throw Error(ErrorCategory::domain, module, msg);
}
[[noreturn]] inline void throw_parse(const std::string& module, const std::string& msg) {
    throw Error(ErrorCategory::parse, module, msg);
}
[[noreturn]] inline void throw_limit(const std::string& module, const std::string& msg) {
    throw Error(ErrorCategory::limit, module, msg);
}
[[noreturn]] inline void throw_internal(const std::string& module, const std::string& msg) {
    throw Error(ErrorCategory::internal, module, msg);
}
[[noreturn]] inline void throw_io(const std::string& module, const std::string& msg) {
    throw Error(ErrorCategory::io, module, msg);
}

} // namespace bogocert

#endif
