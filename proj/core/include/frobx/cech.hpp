#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobx/skew.hpp"

namespace frobx {

// A chosen system of parameters for the top local cohomology model.  The
// regular-sequence and dimension checks gate every operation that relies on
// the Cohen-Macaulay zero-test.
struct SopData {
    RingContext ctx;
    std::vector<Polynomial> params;
    Polynomial product;
    bool verified = false;
};

SopData make_sop(const RingContext& ctx, std::vector<Polynomial> params);

// [r / (a_1...a_d)^j]; the zero class is stored as (0, 0).
struct CechClass {
    Polynomial num;
    i64 j = 0;
};

CechClass cech_class(const SopData& s, Polynomial r, i64 j);

Ideal param_power_ideal(const SopData& s, i64 j);  // (a_1^j, ..., a_d^j)

bool cech_is_zero(const SopData& s, const CechClass& c);
bool cech_equal(const SopData& s, const CechClass& c1, const CechClass& c2);
CechClass cech_x(const SopData& s, const CechClass& c);  // (r, j) -> (r^p, jp)

// x^m kills the class for some m <= bound, i.e. the numerator falls into the
// bounded Frobenius closure of the parameter power ideal.
bool cech_is_torsion(const SopData& s, const CechClass& c, i64 bound);

GradedIdealChain cech_grann(const SopData& s, const CechClass& c, i64 bound);

struct TcReport {
    std::string member;  // "true", "false", or "unknown-at-bound"
    std::string mode;    // "chain" or "test"
    std::optional<GradedIdealChain> chain;
    std::optional<Ideal> limit;
    bool positive_height = false;
    bool stabilized = false;
    std::vector<std::string> warnings;
};

// Membership of r in the tight closure of the parameter power ideal, read off
// either from the annihilator chain of the class (positive-height limit) or
// from an asserted weak test element (c, w0).
TcReport tc_param_membership_chain(const SopData& s, const Polynomial& r, i64 j, i64 bound);
TcReport tc_param_membership_test(const SopData& s, const Polynomial& r, i64 j,
                                  const Polynomial& c, i64 w0, i64 bound);

struct EnescuEntry {
    Polynomial b;
    bool skipped = false;  // b inside the parameter ideal: q(b) is the whole ring by convention
    std::optional<GradedIdealChain> chain;
    std::optional<Ideal> qb;
    bool positive_height = false;
};

struct EnescuReport {
    std::vector<EnescuEntry> entries;
    std::vector<Ideal> maximal;  // maximal members among the computed q(b)
    std::vector<std::string> notes;
};

EnescuReport enescu_zqr(const SopData& s, const std::vector<Polynomial>& samples, i64 bound);

}  // namespace frobx
