#ifndef HPLANAR_HARDNESS_HPP
#define HPLANAR_HARDNESS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hplanar/graph.hpp"
#include "hplanar/modulator.hpp"
#include "hplanar/rng.hpp"

namespace hplanar {

// CNF instance in the restricted planar regime: clauses of two or three
// literals, every variable occurring at most four times (at most twice
// positive, at most twice negated), planar variable-clause incidence graph.
// Literals are DIMACS-style: +v / -v with variables numbered 1..n.
struct PlanarCnf {
    int num_variables = 0;
    std::vector<std::vector<int>> clauses;
};

// Incidence graph: vertices 2(i-1) / 2(i-1)+1 for the positive and negative
// vertex of variable i (the pair adjacent), vertex 2n+j for clause j, and an
// edge from each literal's vertex to its clause.
Graph formula_graph(const PlanarCnf& phi);

// First violated restriction, or nullopt when phi is admissible.
std::optional<std::string> planar_cnf_violation(const PlanarCnf& phi);
// Throws std::invalid_argument naming the violation.
void require_planar_cnf(const PlanarCnf& phi);

// The reduction target together with the vertex roles needed to audit and
// decode it. Per variable a block of five vertices (the adjacent pair plus a
// triangle of pads adjacent to both); per clause a triangle u,v,w plus two or
// three pads adjacent to all of u,v,w. Literal t of clause j attaches its
// variable vertex to clause vertex t, so each clause vertex sees at most one
// variable vertex and w of a two-literal clause sees none.
struct ReductionOutput {
    PlanarCnf phi;
    Graph g;
    std::vector<int> pos_vertex, neg_vertex;        // x_i, negated x_i
    std::vector<std::array<int, 3>> pad_vertex;     // variable-side pads
    std::vector<std::array<int, 3>> clause_vertex;  // u_j, v_j, w_j
    std::vector<std::vector<int>> z_vertex;         // clause-side pads
    std::vector<std::vector<int>> anchor;           // anchor[j][t]: vertex id hosting literal t
};

ReductionOutput reduce(const PlanarCnf& phi);

// Structural audit of a reduction output against its formula: role coverage,
// the mandated edges and no others, pad sizes by clause size, and the
// "no clause vertex adjacent to two variable vertices" discipline.
bool check_reduction_shape(const ReductionOutput& red, std::string* why = nullptr);

bool evaluate(const PlanarCnf& phi, const std::vector<bool>& assignment);

// Exhaustive satisfiability; throws std::length_error above 20 variables.
std::optional<std::vector<bool>> sat_search(const PlanarCnf& phi);
bool sat_bruteforce(const PlanarCnf& phi);

// The explicit modulator of the forward direction: everything outside the
// chosen K4 per variable (false side stays out) and per clause (the pad set
// plus a clause vertex anchored to a true literal).
VertexSet constructive_modulator(const ReductionOutput& red, const std::vector<bool>& assignment);

// Reads an assignment off a planar {K4}-modulator: per variable, the K4
// component confined to the variable block decides the value (true iff the
// positive vertex is in the modulator's residue... i.e. not in the block
// component). Checks the confinement claims and re-verifies satisfaction;
// nullopt with a reason when any audit fails.
std::optional<std::vector<bool>> decode_assignment(const ReductionOutput& red, const VertexSet& x,
                                                   std::string* why = nullptr);

struct HarnessVerdict {
    bool pass = false;
    bool satisfiable = false;      // exhaustive SAT side
    bool modulator_found = false;  // modulator-search side
    std::optional<std::vector<bool>> decoded;
    std::string detail;
};

// SAT(phi) versus modulator existence on the reduction target, with both
// proof directions exercised constructively: a found modulator is decoded and
// the assignment re-checked; a satisfying assignment is turned into an
// explicit modulator and verified.
HarnessVerdict equivalence_harness(const ReductionOutput& red);
HarnessVerdict equivalence_harness(const PlanarCnf& phi);

// Seeded generator of admissible instances: random clauses drawn against the
// per-variable occurrence budgets, rejection-sampled until the incidence
// graph is planar.
PlanarCnf random_planar_cnf(Rng& rng, int num_variables, int num_clauses);

}  // namespace hplanar

#endif
