#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobx/ideal.hpp"

namespace frobx {

// Elements of R[x,f]: finite sums  sum_i r_i x^i  subject to  x r = r^p x.
class SkewPoly {
public:
    struct STerm {
        Polynomial coeff;
        i64 deg;
    };

    SkewPoly(RingContext ctx, std::vector<STerm> terms);
    static SkewPoly zero(const RingContext& ctx);
    static SkewPoly scalar(const RingContext& ctx, Polynomial r);
    static SkewPoly x_power(const RingContext& ctx, i64 n);

    const RingContext& context() const { return ctx_; }
    const std::vector<STerm>& terms() const { return terms_; }  // degrees strictly increasing
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const SkewPoly& other) const;

private:
    RingContext ctx_;
    std::vector<STerm> terms_;
};

SkewPoly skew_add(const SkewPoly& u, const SkewPoly& v);
SkewPoly skew_mul(const SkewPoly& u, const SkewPoly& v);
std::string format_skew(const SkewPoly& u);

// A graded two-sided ideal of R[x,f], i.e. an ascending chain of ideals of R,
// listed up to a working bound with an eventual-constancy marker.
struct GradedIdealChain {
    RingContext ctx;
    std::vector<Ideal> entries;          // b_0, ..., b_k
    std::optional<i64> stable_from;      // b_n = b_{stable_from} for n >= stable_from
    bool certified = false;              // stability proven, not just observed

    const Ideal& back() const { return entries.back(); }
};

// Ascending check; the x-multiplication condition b_n^{[p]} ⊆ b_{n+1} follows
// from ascent because b_n^{[p]} ⊆ b_n already.
bool validate_chain(const GradedIdealChain& c);

GradedIdealChain principal_chain(const Ideal& b);  // constant chain, certified

// Entry at the stable index; the caller should consult certified alongside.
Ideal limit_ideal(const GradedIdealChain& c);

GradedIdealChain intersect_chains(const GradedIdealChain& a, const GradedIdealChain& b);

// Text form "chain: [s*t]; [t]; stable".
std::string format_chain(const GradedIdealChain& c);
GradedIdealChain parse_chain(const RingContext& ctx, const std::string& text);

// Entry for arbitrary degree: chains list a prefix, the tail repeats the last
// listed entry (exact when stable_from is set, else a sound over-approximation
// for annihilation tests, since entries ascend).
const Ideal& chain_entry_at(const GradedIdealChain& c, i64 n);

// Graded annihilator entries from a finite window of per-degree annihilators
// D_0..D_N: the degree-n entry is the suffix intersection over m = n..N.
// An entry is trusted only once the window stops moving it (the same suffix
// intersection over the window shortened by one step agrees); the reported
// chain is the settled prefix.  When nothing settles, every entry collapses to
// the conservative zero ideal and no stability is claimed.
GradedIdealChain chain_from_colon_family(const RingContext& ctx, const std::vector<Ideal>& colons);

}  // namespace frobx
