#ifndef PAAC_ERRORS_HPP
#define PAAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace paac {

// Violated precondition or invariant (caller bug).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Non-finite value where finiteness is guaranteed; aborts the run.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Bad config file or flag value.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem / checkpoint I/O failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw ContractError(what);
}

}  // namespace paac

#endif
