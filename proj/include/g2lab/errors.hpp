#ifndef G2LAB_ERRORS_HPP
#define G2LAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g2lab {

// Bad user data or a violated operation precondition (CLI exit 2).
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A structural fact the classification pipeline relies on failed to hold.
// Firing on a verified homology sphere means either a build bug or a
// genuinely remarkable input (CLI exit 3).
class theorem_violation : public std::runtime_error {
public:
    explicit theorem_violation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace g2lab

#endif
