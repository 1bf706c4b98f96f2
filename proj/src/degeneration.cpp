#include <prelie/degeneration.hpp>

#include <algorithm>
#include <sstream>

namespace prelie {

Matrix<RatFunc> basis_change(const Witness& w) {
    if (w.mat.rows() != w.mat.cols()) throw std::invalid_argument("witness matrix must be square");
    if (determinant(w.mat, RatFunc(1), RatFunc(0)).is_zero()) throw SingularMatrix();
    if (w.inverse_given) return w.mat;
    return inverse(w.mat, RatFunc(1), RatFunc(0));
}

Witness scaling_witness(int dim) {
    const RatFunc t = RatFunc::variable();
    Matrix<RatFunc> m = Matrix<RatFunc>::identity(dim, RatFunc(1), RatFunc(0)).scaled(t);
    return Witness{m, true};
}

namespace {

template <class R>
Algebra<RatFunc> act_impl(const Algebra<R>& a, const Witness& w) {
    const int n = a.dim;
    if (w.mat.rows() != n) throw DimensionMismatch();
    const Matrix<RatFunc> h = basis_change(w);
    const Matrix<RatFunc> hinv = inverse(h, RatFunc(1), RatFunc(0));

    Algebra<RatFunc> out(n, a.label);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // product of the new basis vectors f_i = h e_i, f_j = h e_j,
            // still in e-coordinates
            std::vector<RatFunc> prod(n, RatFunc(0));
            for (int p = 0; p < n; ++p) {
                for (int q = 0; q < n; ++q) {
                    const RatFunc f = h(p, i) * h(q, j);
                    if (f.is_zero()) continue;
                    for (int r = 0; r < n; ++r) prod[r] += f * RatFunc(a.at(p, q, r));
                }
            }
            // back to f-coordinates
            for (int k = 0; k < n; ++k) {
                RatFunc acc(0);
                for (int r = 0; r < n; ++r) acc += hinv(k, r) * prod[r];
                out.at(i, j, k) = acc;
            }
        }
    }
    return out;
}

}  // namespace

Algebra<RatFunc> act(const Algebra<Rational>& a, const Witness& w) { return act_impl(a, w); }
Algebra<RatFunc> act(const Algebra<RatFunc>& a, const Witness& w) { return act_impl(a, w); }

std::optional<Algebra<Rational>> limit(const Algebra<RatFunc>& a) {
    Algebra<Rational> out(a.dim, a.label);
    for (std::size_t k = 0; k < a.c.size(); ++k) {
        const std::optional<Rational> v = limit_at_zero(a.c[k]);
        if (!v) return std::nullopt;
        out.c[k] = *v;
    }
    return out;
}

bool verify_witness(const Algebra<Rational>& a, const Algebra<Rational>& b, const Witness& w) {
    if (a.dim != b.dim) throw DimensionMismatch();
    const std::optional<Algebra<Rational>> lim = limit(act(a, w));
    return lim && lim->same_constants(b);
}

std::string criterion_name(Criterion c) {
    switch (c) {
        case Criterion::OrbitDim: return "orbit-dimension";
        case Criterion::LeftAnnihilator: return "left-annihilator";
        case Criterion::RightAnnihilator: return "right-annihilator";
        case Criterion::Center: return "center";
        case Criterion::GeneralizedDerivations: return "weighted-derivations";
        case Criterion::IdentityTransfer: return "identity-transfer";
        case Criterion::TraceInvariant: return "c-invariant";
        case Criterion::Commutativity: return "commutativity";
    }
    return "?";
}

namespace {

Reason dim_reason(Criterion crit, const std::string& what, int lhs, int rhs, const char* rel) {
    Reason r{crit, ""};
    r.lhs = lhs;
    r.rhs = rhs;
    std::ostringstream os;
    os << what << ": " << lhs << " " << rel << " " << rhs;
    r.detail = os.str();
    return r;
}

}  // namespace

AlgebraProfile make_profile(const Algebra<Rational>& a, const CriteriaConfig& config) {
    AlgebraProfile p;
    p.algebra = a;
    p.orbit_dimension = orbit_dim(a);
    p.left_ann_dim = left_annihilator(a).dim;
    p.right_ann_dim = right_annihilator(a).dim;
    p.center_dim = center(a).dim;
    p.commutative = is_commutative(a);
    for (const auto& w : config.weights) p.weighted_der_dims.push_back(generalized_derivations(a, w).dim);
    for (const auto& degree : config.word_degrees) {
        AlgebraProfile::DegreeData d;
        d.words = all_words(degree.first, degree.second);
        for (const auto& w : d.words) d.evaluated.push_back(evaluate_word(a, w));
        d.identities = identity_basis(a, d.words);
        p.degrees.push_back(std::move(d));
    }
    for (int i = 1; i <= config.max_i; ++i)
        for (int j = 1; j <= config.max_j; ++j) p.c_table.push_back(c_invariant(a, i, j));
    return p;
}

namespace {

// Evaluate one of A's identities on B through B's precomputed word matrices.
Matrix<MultiPoly> combine_words(const AlgebraProfile::DegreeData& data, const OperatorIdentity& t, int dim) {
    const int nv = coordinate_count(dim);
    Matrix<MultiPoly> acc(dim, dim, MultiPoly(nv));
    for (const auto& [c, w] : t.terms) {
        const auto it = std::find(data.words.begin(), data.words.end(), w);
        if (it == data.words.end()) throw std::logic_error("word missing from profile");
        acc = acc + data.evaluated[it - data.words.begin()].scaled(MultiPoly::constant(nv, c));
    }
    return acc;
}

bool matrix_is_zero(const Matrix<MultiPoly>& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

}  // namespace

Verdict criteria_battery(const AlgebraProfile& a, const AlgebraProfile& b, const CriteriaConfig& config,
                         const std::optional<Witness>& known_witness) {
    if (a.algebra.dim != b.algebra.dim) throw DimensionMismatch();
    Verdict v;

    // (1) proper degenerations strictly drop orbit dimension
    if (!(a.orbit_dimension > b.orbit_dimension))
        v.reasons.push_back(dim_reason(Criterion::OrbitDim, "orbit dim", a.orbit_dimension, b.orbit_dimension, "<="));

    // (2) annihilator and center dimensions can only grow
    if (a.left_ann_dim > b.left_ann_dim)
        v.reasons.push_back(
            dim_reason(Criterion::LeftAnnihilator, "dim left annihilator", a.left_ann_dim, b.left_ann_dim, ">"));
    if (a.right_ann_dim > b.right_ann_dim)
        v.reasons.push_back(
            dim_reason(Criterion::RightAnnihilator, "dim right annihilator", a.right_ann_dim, b.right_ann_dim, ">"));
    if (a.center_dim > b.center_dim)
        v.reasons.push_back(dim_reason(Criterion::Center, "dim center", a.center_dim, b.center_dim, ">"));

    // (3) weighted derivation dimensions can only grow
    for (std::size_t k = 0; k < config.weights.size(); ++k) {
        const int da = a.weighted_der_dims[k], db = b.weighted_der_dims[k];
        if (da > db) {
            const auto& w = config.weights[k];
            Reason r = dim_reason(Criterion::GeneralizedDerivations, "dim Der", da, db, ">");
            r.weights = w;
            r.detail = "dim Der(" + to_string(w.alpha) + "," + to_string(w.beta) + "," + to_string(w.gamma) +
                       "): " + std::to_string(da) + " > " + std::to_string(db);
            v.reasons.push_back(std::move(r));
        }
    }

    // (4) operator identities transfer to the orbit closure
    for (std::size_t k = 0; k < config.word_degrees.size(); ++k) {
        bool failed = false;
        for (const auto& t : a.degrees[k].identities) {
            Matrix<MultiPoly> residual = combine_words(b.degrees[k], t, b.algebra.dim);
            if (!matrix_is_zero(residual)) {
                Reason r{Criterion::IdentityTransfer, ""};
                r.i = config.word_degrees[k].first;
                r.j = config.word_degrees[k].second;
                r.identity = t;
                r.detail = "identity of degree (" + std::to_string(r.i) + "," + std::to_string(r.j) +
                           ") fails: " + t.to_string();
                const auto names = coordinate_names(b.algebra.dim);
                for (int row = 0; row < residual.rows(); ++row) {
                    for (int col = 0; col < residual.cols(); ++col) {
                        if (residual(row, col).is_zero()) continue;
                        r.detail += "; residual(" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                                    ") = " + residual(row, col).to_string(names);
                    }
                }
                r.residual = std::move(residual);
                v.reasons.push_back(std::move(r));
                failed = true;
                break;
            }
        }
        if (failed) break;
    }

    // (5) constant trace invariants must agree
    for (std::size_t k = 0; k < a.c_table.size(); ++k) {
        if (!a.c_table[k].is_constant() || !b.c_table[k].is_constant()) continue;
        const Rational va = a.c_table[k].rational_value(), vb = b.c_table[k].rational_value();
        if (va != vb) {
            Reason r{Criterion::TraceInvariant, ""};
            r.i = static_cast<int>(k) / config.max_j + 1;
            r.j = static_cast<int>(k) % config.max_j + 1;
            r.lhs = va;
            r.rhs = vb;
            r.detail = "c[" + std::to_string(r.i) + "," + std::to_string(r.j) + "]: " + to_string(va) +
                       " != " + to_string(vb);
            v.reasons.push_back(std::move(r));
            break;
        }
    }

    // (6) a commutative algebra only degenerates to commutative algebras
    if (a.commutative && !b.commutative) {
        Reason r{Criterion::Commutativity, "source is commutative, target is not"};
        v.reasons.push_back(std::move(r));
    }

    if (!v.reasons.empty()) {
        v.state = Verdict::State::RuledOut;
        return v;
    }
    if (known_witness && verify_witness(a.algebra, b.algebra, *known_witness)) {
        v.state = Verdict::State::Verified;
        v.witness = known_witness;
        return v;
    }
    v.state = Verdict::State::Undetermined;
    return v;
}

Verdict criteria_battery(const Algebra<Rational>& a, const Algebra<Rational>& b, const CriteriaConfig& config,
                         const std::optional<Witness>& known_witness) {
    return criteria_battery(make_profile(a, config), make_profile(b, config), config, known_witness);
}

void check_verdict_consistency(const std::set<std::pair<int, int>>& verified,
                               const std::vector<std::vector<const Verdict*>>& verdicts,
                               const std::vector<HasseNode>& nodes) {
    for (const auto& [s, t] : verified) {
        const Verdict* v = verdicts[s][t];
        if (v && v->state == Verdict::State::RuledOut) {
            throw InconsistentInput("witness for " + nodes[s].label + " -> " + nodes[t].label +
                                    " verifies, but the pair is ruled out by " +
                                    criterion_name(v->reasons.front().criterion));
        }
    }
}

HasseGraph build_hasse(const std::vector<LabeledAlgebra>& algebras, const std::vector<LabeledWitness>& witnesses,
                       const CriteriaConfig& config) {
    const int n = static_cast<int>(algebras.size());
    HasseGraph g;
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) {
        g.nodes.push_back({algebras[i].label, orbit_dim(algebras[i].algebra)});
        if (!index.emplace(algebras[i].label, i).second)
            throw std::invalid_argument("duplicate node label: " + algebras[i].label);
    }

    std::set<std::pair<int, int>> verified;
    std::map<std::pair<int, int>, Witness> witness_of;
    for (const auto& w : witnesses) {
        const auto si = index.find(w.source), ti = index.find(w.target);
        if (si == index.end() || ti == index.end())
            throw std::invalid_argument("witness references unknown label " + w.source + " -> " + w.target);
        if (!verify_witness(algebras[si->second].algebra, algebras[ti->second].algebra, w.witness))
            throw std::invalid_argument("witness does not verify: " + w.source + " -> " + w.target);
        verified.insert({si->second, ti->second});
        witness_of.emplace(std::make_pair(si->second, ti->second), w.witness);
    }

    // Pairwise verdicts from per-node profiles.
    std::vector<AlgebraProfile> profiles;
    profiles.reserve(n);
    for (const auto& a : algebras) profiles.push_back(make_profile(a.algebra, config));

    std::vector<std::vector<Verdict>> verdicts(n, std::vector<Verdict>(n));
    std::vector<std::vector<const Verdict*>> verdict_ptrs(n, std::vector<const Verdict*>(n, nullptr));
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            std::optional<Witness> known;
            if (auto it = witness_of.find({s, t}); it != witness_of.end()) known = it->second;
            verdicts[s][t] = criteria_battery(profiles[s], profiles[t], config, known);
            verdict_ptrs[s][t] = &verdicts[s][t];
        }
    }
    check_verdict_consistency(verified, verdict_ptrs, g.nodes);

    // Reachability: verified witnesses closed under composition.
    g.relation = verified;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<int, int>> additions;
        for (const auto& [s, m] : g.relation)
            for (const auto& [m2, t] : g.relation)
                if (m == m2 && s != t && !g.relation.count({s, t})) additions.push_back({s, t});
        for (const auto& e : additions) grew |= g.relation.insert(e).second;
    }

    for (const auto& [s, t] : g.relation) {
        bool implied = false;
        for (int m = 0; m < n && !implied; ++m) {
            if (m == s || m == t) continue;
            if (g.relation.count({s, m}) && g.relation.count({m, t})) implied = true;
        }
        if (!implied) g.covering_edges.push_back({s, t});
    }
    return g;
}

std::string to_dot(const HasseGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box];\n";
    // Group nodes by orbit dimension, highest first.
    std::set<int, std::greater<int>> dims;
    for (const auto& node : g.nodes) dims.insert(node.orbit_dimension);
    for (int d : dims) {
        os << "  { rank=same;";
        for (const auto& node : g.nodes)
            if (node.orbit_dimension == d) os << " \"" << node.label << "\";";
        os << " }\n";
    }
    for (const auto& node : g.nodes)
        os << "  \"" << node.label << "\" [label=\"" << node.label << " [" << node.orbit_dimension << "]\"];\n";
    for (const auto& [s, t] : g.covering_edges)
        os << "  \"" << g.nodes[s].label << "\" -> \"" << g.nodes[t].label << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace prelie
