#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sle/instance.hpp"
#include "sle/options.hpp"

namespace sle {

struct Literal {
    int var = 1;  // 1-based
    bool negated = false;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<Literal, 3>> clauses;

    // three distinct, pairwise non-complementary literals per clause
    void validate() const;  // throws InputError
    bool satisfied_by(const std::vector<bool>& assignment) const;  // assignment[i-1] = x_i
};

struct MccInput {
    std::vector<std::vector<std::string>> parts;  // V_1 .. V_k, each in index order
    std::vector<std::pair<std::string, std::string>> edges;

    int k() const { return int(parts.size()); }
    void validate() const;  // throws InputError
};

// The gadget as a raw fragment. The multi-edge form may repeat an edge, so
// only the simple form converts to an Instance.
struct GadgetFragment {
    int F = 1;
    int ell = 2;
    int pd = 2;
    bool simple = true;
    std::vector<std::string> spine;
    std::vector<std::tuple<std::string, std::string, int>> old_edges;
    std::vector<std::string> new_vertices;  // f_1 .. f_F
    std::vector<std::pair<std::string, std::string>> new_edges;
    std::vector<std::string> v_names;  // v_1 .. v_{F+1}

    std::size_t vertex_count() const { return spine.size() + new_vertices.size(); }
    std::size_t edge_count() const { return old_edges.size() + new_edges.size(); }
};

GadgetFragment build_fixation_gadget(int F, int ell, bool simple = true, std::vector<std::string> f_names = {});

struct ReductionCertificate {
    enum class Kind { Sat3, Mcc, Gadget };
    Kind kind = Kind::Gadget;
    int ell = 0;
    int pd = 0;
    std::vector<std::string> gadget_v;  // v_1 .. v_{F+1}
    std::vector<std::string> gadget_f;  // f_1 .. f_F

    // Sat3
    int num_vars = 0;
    std::string s, v;
    std::vector<std::string> var_vertex;  // x_i
    std::vector<int> page_pos, page_neg;  // p_i, p_not_i
    std::vector<std::string> clause_vertex;

    // Mcc
    std::vector<std::vector<std::string>> original;  // [alpha][i-1] = v_alpha^i
    std::vector<std::vector<std::string>> copy;      // [alpha][i] = u_alpha^i, i in 0..n_alpha+1
    std::vector<std::string> x;                      // x_1 .. x_k
    std::vector<std::tuple<std::string, std::string, int>> edge_page;  // (v_alpha^i, v_beta^j, p_e), alpha < beta
};

std::pair<Instance, ReductionCertificate> gadget_instance(int F, int ell);
std::pair<Instance, ReductionCertificate> reduce_3sat(const CnfFormula& phi);
std::pair<Instance, ReductionCertificate> reduce_mcc(const MccInput& inp);

struct Extracted {
    std::vector<bool> assignment;     // Sat3
    std::vector<std::string> clique;  // Mcc, one vertex per color
};

// Throws CorruptCertificate when the layout does not fit the certificate.
Extracted extract_certificate(const Instance& inst, const Layout& sol, const ReductionCertificate& cert);

// Layouts built along the forward direction of the hardness proofs.
Layout sat3_witness(const Instance& inst, const ReductionCertificate& cert, const CnfFormula& phi,
                    const std::vector<bool>& assignment);
Layout mcc_witness(const Instance& inst, const ReductionCertificate& cert, const MccInput& inp,
                   const std::vector<std::string>& clique);

bool is_colorful_clique(const MccInput& inp, const std::vector<std::string>& vertices);
std::optional<std::vector<std::string>> find_colorful_clique(const MccInput& inp);

struct LemmaReport {
    std::uint64_t solutions = 0;
    std::vector<std::pair<std::string, bool>> clauses;  // clause -> held on every solution
    std::vector<std::string> violations;                // first few counterexamples

    bool all_pass() const;
    bool vacuous() const { return solutions == 0; }
};

// Enumerates every solution (oracle cap applies) and checks the lemma clauses.
LemmaReport check_reduction_lemmas(const Instance& inst, const ReductionCertificate& cert,
                                   const SolveOptions& opts = {});

}  // namespace sle
