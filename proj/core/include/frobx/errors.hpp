#pragma once

#include <stdexcept>
#include <string>

namespace frobx {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Operands constructed over different rings (or quotients thereof).
class ring_mismatch : public error {
public:
    explicit ring_mismatch(const std::string& what) : error(what) {}
};

// Malformed input: bad script text, bad polynomial text, invalid argument values.
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

// A mathematical precondition the library cannot verify was not asserted by the
// caller (missing equidimensionality flag, failed torsion-freeness probe, ...).
// The operation refuses rather than guessing.
class refusal : public error {
public:
    explicit refusal(const std::string& what) : error(what) {}
};

// A configured budget ran out: Buchberger pair limit, exponent overflow,
// enumeration cap.  Never a silent wrong answer.
class resource_error : public error {
public:
    explicit resource_error(const std::string& what) : error(what) {}
};

}  // namespace frobx
