#pragma once

#include "weylcheck/cartan_type.hpp"
#include "weylcheck/finite_group.hpp"
#include "weylcheck/homomorphism.hpp"
#include "weylcheck/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylcheck {

// A subdirect product: carrier sits inside factors[0] x factors[1] (nested products for r > 2)
// and projects onto every factor.
struct Compositum {
    std::vector<FiniteGroup> factors;
    std::vector<std::string> labels;
    FiniteGroup carrier;
};

// Coordinates of x in the flattened product of c.factors.
std::vector<Index> compositum_coordinates(const Compositum& c, Index x);
// Each projection onto a factor is onto.
bool projections_surjective(const Compositum& c);

inline constexpr std::size_t kDefaultProductBound = 1'000'000;

// Every subgroup of A x B projecting onto both factors, one per Goursat triple
// (N_A, N_B, A/N_A -> B/N_B). Throws BoundExceeded when |A||B| > product_bound.
std::vector<Compositum> goursat_subdirect(const FiniteGroup& A, const FiniteGroup& B,
                                          std::size_t product_bound = kDefaultProductBound);

// Same, keeping one isomorphism per class modulo inner automorphisms of B/N_B; every subdirect
// product is conjugate in A x B to one of these. Only carriers whose order is a multiple of
// order_multiple are built.
std::vector<Compositum> goursat_subdirect_up_to_conjugacy(const FiniteGroup& A, const FiniteGroup& B,
                                                          std::uint64_t order_multiple = 1,
                                                          std::size_t product_bound = kDefaultProductBound);

enum class Rule { JH, Exponent, DerivedLength, AbelianKernel, BruteForce };
const char* to_string(Rule r);
std::optional<Rule> rule_from_string(const std::string& s);

enum class Outcome { Obstructed, QuotientExists, Undecided, IsoTrivial, Isogenous };
const char* to_string(Outcome o);
std::optional<Outcome> outcome_from_string(const std::string& s);

struct DecideOptions {
    int max_r = 2;
    std::size_t product_bound = kDefaultProductBound;
    std::size_t normal_bound = kDefaultNormalBound;
    std::uint64_t node_budget = 100'000'000;
    // Subdirect products built by the exhaustive stage; mostly a brake on r = 3.
    std::uint64_t compositum_budget = 5000;
    // Run the exhaustive stage even after a rule has fired.
    bool corroborate = false;
};

// Is W(quotient) a quotient of a compositum of normal subgroups of W(source)?
struct ObstructionReport {
    CartanType quotient;
    CartanType source;
    Outcome outcome = Outcome::Undecided;
    std::optional<Rule> rule;   // first rule of the ladder that fired
    std::vector<Rule> fired;    // all rules that fired
    Json witness = Json::object();
    Json search = nullptr;      // transcript of the exhaustive stage when it ran
    std::string scope;          // what the verdict covers
    bool table_derived = false; // facts for a side came from the static table
    int max_r = 2;
    Json budgets = Json::object();
    double elapsed_ms = 0;
};

void to_json(Json& j, const ObstructionReport& r);
void from_json(const Json& j, ObstructionReport& r);

// Ladder JH -> Exponent -> DerivedLength -> AbelianKernel, then the exhaustive stage. Bounds
// and budgets hit by the exhaustive stage come back as Undecided.
ObstructionReport decide_pair(CartanType quotient, CartanType source, const DecideOptions& options = {});

// Unordered cell: flags isogenous and iso-trivial pairs, otherwise reports the first direction
// that is obstructed.
ObstructionReport decide_cell(CartanType a, CartanType b, const DecideOptions& options = {});

struct ObstructionMatrix {
    std::vector<CartanType> types;
    std::vector<ObstructionReport> cells; // i < j in input order; diagonal cells included
};

ObstructionMatrix nonquotient_matrix(const std::vector<CartanType>& types, const DecideOptions& options = {});
std::string matrix_text(const ObstructionMatrix& m);
Json matrix_json(const ObstructionMatrix& m);
// Every non-diagonal cell that is not flagged is obstructed.
bool all_obstructed(const ObstructionMatrix& m);

// JH_s of every subdirect product of the factors equals the union of their JH_s: all of them
// for two factors, a deterministic sample for three.
Verdict verify_jh_compositum(const std::vector<FiniteGroup>& factors, std::size_t max_total = kDefaultProductBound);

} // namespace weylcheck
