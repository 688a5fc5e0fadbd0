#pragma once

#include <string>
#include <vector>

#include "frobx/finite_modules.hpp"
#include "frobx/radical.hpp"
#include "frobx/towers.hpp"

namespace frobx {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string note;
};

// The computed family of graded-annihilator ideals of a module, closed under
// intersection, with the matching annihilator submodules and the structural
// verifications run during construction.
struct SpecialIdealLattice {
    RingContext ctx;
    std::vector<Ideal> ideals;                       // sorted by canonical key
    std::vector<bool> certified;                     // per ideal
    std::vector<bool> prime;                         // intersection-irreducible proper members
    std::vector<std::vector<std::string>> delta;     // nonzero members of the matching submodule
    bool complete = false;                           // exhaustive vs generator-limited
    std::vector<CheckLine> checks;

    bool all_checks_pass() const;
    int index_of(const Ideal& b) const;  // -1 if absent
};

// Exhaustive: every element of the module contributes its graded annihilator.
SpecialIdealLattice special_ideal_lattice(const FiniteCyclicsModule& M, i64 bound);

// Generator-limited: the pool supplies the sampled elements.
SpecialIdealLattice special_ideal_lattice(const CyclicTower& T,
                                          const std::vector<CyclicTower::Elem>& pool, i64 bound);

// Maximal members of the lattice below the whole ring.
std::vector<Ideal> maximal_special_primes(const SpecialIdealLattice& L);

// Intersection of the positive-height primes; the whole ring when there are
// none.  Needs the height convention of the underlying context.
Ideal smallest_positive_height_ideal(const SpecialIdealLattice& L);

struct Ga4Report {
    bool ok = false;
    std::vector<CheckLine> checks;
    std::string inner_ideal;     // ∩ of the U-part primes
    std::string quotient_ideal;  // ∩ of the complementary primes
};

// Splitting along a partition of the prime components of a special ideal:
// the U-part cuts out a proper nonzero annihilator submodule whose graded
// annihilator recovers the U-part, and the complement shows up as the
// colon on the decomposition side.
Ga4Report split_ga4(const CyclicTower& T, const std::vector<CyclicTower::Elem>& pool,
                    const RadicalDecomposition& b, const std::vector<int>& U, i64 bound);

struct Ga15Report {
    bool ok = false;
    i64 m0 = 0;               // HSL number
    std::string bound_ideal;  // the minimal positive-height ideal used
    std::vector<CheckLine> checks;
    std::vector<std::string> counterexamples;
};

// For every element of a finite module: some multiplier outside the minimal
// primes eventually kills the orbit iff the element is annihilated by the
// shifted principal chain on the minimal positive-height ideal.
Ga15Report ga15_equivalence_check(const FiniteCyclicsModule& H, i64 bound);

}  // namespace frobx
