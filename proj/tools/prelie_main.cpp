// Command-line interface for the pre-Lie degeneration toolkit.
//
// Exit codes: 0 success / true / verified, 1 false / ruled out,
// 2 undetermined, 3 input error.

#include <prelie/catalog.hpp>
#include <prelie/coeffparse.hpp>
#include <prelie/formats.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace prelie;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitInputError = 3;

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::optional<Rational> parse_param_value(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_rational(text);
}

struct LoadedAlgebra {
    Algebra<Rational> algebra;
    std::string label;
};

// Reads an algebra file and instantiates its parameter if one is declared.
// `param` syntax: "name=value" or "value".
LoadedAlgebra load_concrete(const std::string& path, const std::string& param) {
    AlgebraFile f = read_algebra_file(path);
    std::optional<Rational> value;
    if (!param.empty()) {
        const auto eq = param.find('=');
        value = parse_rational(eq == std::string::npos ? param : param.substr(eq + 1));
    }
    LoadedAlgebra out{f.instantiated(value), f.label};
    if (f.parametric() && !f.label.empty() && value) out.label = f.label + "(" + to_string(*value) + ")";
    out.algebra.label = out.label;
    return out;
}

int cmd_check(const std::string& path) {
    AlgebraFile f = read_algebra_file(path);
    bool prelie_ok, novikov_ok, commutative_ok, associative_ok;
    if (f.parametric()) {
        const auto& a = f.symbolic();
        prelie_ok = is_prelie(a);
        novikov_ok = is_novikov(a);
        commutative_ok = is_commutative(a);
        associative_ok = is_associative(a);
    } else {
        const auto& a = f.concrete();
        prelie_ok = is_prelie(a);
        novikov_ok = is_novikov(a);
        commutative_ok = is_commutative(a);
        associative_ok = is_associative(a);
    }
    if (!f.label.empty()) std::cout << "label=" << f.label << "\n";
    std::cout << "prelie=" << yesno(prelie_ok) << "\n"
              << "novikov=" << yesno(novikov_ok) << "\n"
              << "commutative=" << yesno(commutative_ok) << "\n"
              << "associative=" << yesno(associative_ok) << "\n";
    return prelie_ok ? kExitTrue : kExitFalse;
}

int cmd_invariants(const std::string& path, const std::string& param) {
    const LoadedAlgebra in = load_concrete(path, param);
    const auto& a = in.algebra;
    std::cout << "dim_der=" << der(a).dim << "\n"
              << "dim_left_annihilator=" << left_annihilator(a).dim << "\n"
              << "dim_right_annihilator=" << right_annihilator(a).dim << "\n"
              << "dim_center=" << center(a).dim << "\n"
              << "orbit_dim=" << orbit_dim(a) << "\n"
              << "associated_lie=" << (is_abelian(associated_lie(a)) ? "abelian" : "nonabelian") << "\n";
    return kExitTrue;
}

int cmd_derivations(const std::string& path, const std::string& param, const std::string& weights_text) {
    const LoadedAlgebra in = load_concrete(path, param);
    DerivationWeights w{1, 1, 1};
    if (!weights_text.empty()) {
        std::vector<Rational> parts;
        std::string token;
        std::istringstream is(weights_text);
        while (std::getline(is, token, ',')) parts.push_back(parse_rational(token));
        if (parts.size() != 3) throw FileError("--weights expects three comma-separated rationals");
        w = DerivationWeights{parts[0], parts[1], parts[2]};
    }
    const Subspace s = generalized_derivations(in.algebra, w);
    std::cout << "weights=" << to_string(w.alpha) << "," << to_string(w.beta) << "," << to_string(w.gamma) << "\n";
    std::cout << "dim=" << s.dim << "\n";
    int index = 1;
    for (const auto& m : subspace_as_matrices(s, in.algebra.dim)) {
        std::cout << "basis[" << index++ << "]=";
        for (int i = 0; i < m.rows(); ++i) {
            std::cout << (i == 0 ? "[" : "; ");
            for (int j = 0; j < m.cols(); ++j) std::cout << (j == 0 ? "" : ", ") << to_string(m(i, j));
        }
        std::cout << "]\n";
    }
    return kExitTrue;
}

int cmd_identities(const std::string& path, const std::string& param, const std::string& degree_text) {
    const LoadedAlgebra in = load_concrete(path, param);
    int dx = 1, dy = 1;
    if (!degree_text.empty()) {
        const auto comma = degree_text.find(',');
        if (comma == std::string::npos) throw FileError("--degree expects \"i,j\"");
        dx = std::stoi(degree_text.substr(0, comma));
        dy = std::stoi(degree_text.substr(comma + 1));
    }
    const auto words = all_words(dx, dy);
    const auto basis = identity_basis(in.algebra, words);
    std::cout << "degree=" << dx << "," << dy << "\n";
    std::cout << "words=" << words.size() << "\n";
    std::cout << "dim=" << basis.size() << "\n";
    int index = 1;
    for (const auto& t : basis) std::cout << "identity[" << index++ << "]: " << t.to_string() << " = 0\n";
    return kExitTrue;
}

int cmd_cij(const std::string& path, const std::string& param, const std::string& max_text) {
    AlgebraFile f = read_algebra_file(path);
    int max_i = 4, max_j = 4;
    if (!max_text.empty()) {
        const auto comma = max_text.find(',');
        if (comma == std::string::npos) throw FileError("--max expects \"I,J\"");
        max_i = std::stoi(max_text.substr(0, comma));
        max_j = std::stoi(max_text.substr(comma + 1));
    }
    bool flagged = false;
    const bool symbolic = f.parametric() && param.empty();
    std::optional<Algebra<Rational>> concrete;
    if (!symbolic) concrete = load_concrete(path, param).algebra;
    for (int i = 1; i <= max_i; ++i) {
        for (int j = 1; j <= max_j; ++j) {
            const CInvariant c = symbolic ? c_invariant(f.symbolic(), i, j) : c_invariant(*concrete, i, j);
            std::cout << "c[" << i << "," << j << "]=" << c.describe();
            if (c.den_vanishes_at_sample) {
                std::cout << "  (denominator vanishes at some nonzero sample)";
                flagged = true;
            }
            std::cout << "\n";
        }
    }
    if (flagged)
        std::cout << "note: constancy is relative to the points where the denominator is nonzero\n";
    return kExitTrue;
}

int cmd_verify(const std::string& a_path, const std::string& b_path, const std::string& w_path,
               const std::string& param_a, const std::string& param_b) {
    const LoadedAlgebra a = load_concrete(a_path, param_a);
    const LoadedAlgebra b = load_concrete(b_path, param_b);
    const Witness w = read_witness_file(w_path);
    const auto lim = limit(act(a.algebra, w));
    if (!lim) {
        std::cout << "verified=false\nlimit=diverges\n";
        return kExitFalse;
    }
    const bool ok = lim->same_constants(b.algebra);
    std::cout << "verified=" << (ok ? "true" : "false") << "\n";
    std::cout << "limit:\n" << describe_products(*lim);
    return ok ? kExitTrue : kExitFalse;
}

int cmd_criteria(const std::string& a_path, const std::string& b_path, const std::string& param_a,
                 const std::string& param_b) {
    const LoadedAlgebra a = load_concrete(a_path, param_a);
    const LoadedAlgebra b = load_concrete(b_path, param_b);
    if (!a.label.empty() && a.label == b.label) throw FileError("criteria expects two distinct algebras");

    // Known witnesses apply when both labels match catalog nodes.
    std::optional<Witness> known;
    const auto all_nodes = catalog::dim2_nodes();
    const catalog::Node* na = nullptr;
    const catalog::Node* nb = nullptr;
    for (const auto& n : all_nodes) {
        if (n.label == a.label) na = &n;
        if (n.label == b.label) nb = &n;
    }
    if (na && nb) {
        for (const auto& w : catalog::witnesses_for(all_nodes)) {
            if (w.source == a.label && w.target == b.label) {
                known = w.witness;
                break;
            }
        }
    }

    const Verdict v = criteria_battery(a.algebra, b.algebra, CriteriaConfig{}, known);
    switch (v.state) {
        case Verdict::State::Verified:
            std::cout << "verdict=Verified\n";
            return kExitTrue;
        case Verdict::State::RuledOut:
            std::cout << "verdict=RuledOut\n";
            for (const auto& r : v.reasons)
                std::cout << "reason[" << criterion_name(r.criterion) << "]: " << r.detail << "\n";
            return kExitFalse;
        case Verdict::State::Undetermined:
            std::cout << "verdict=Undetermined\n";
            return kExitUndetermined;
    }
    return kExitInputError;
}

int cmd_hasse(const std::string& which, bool novikov, const std::string& dot_path) {
    std::vector<catalog::Node> nodes;
    if (which == "dim1") {
        nodes = catalog::dim1_nodes();
    } else if (which == "dim2") {
        nodes = novikov ? catalog::dim2_novikov_nodes() : catalog::dim2_nodes();
    } else {
        throw FileError("--catalog must be dim1 or dim2");
    }
    std::vector<LabeledAlgebra> algebras;
    for (const auto& n : nodes) algebras.push_back({n.label, n.algebra});
    const HasseGraph g = build_hasse(algebras, catalog::witnesses_for(nodes));
    const std::string dot = to_dot(g);
    if (!dot_path.empty()) {
        std::ofstream out(dot_path, std::ios::binary);
        if (!out) throw FileError("cannot write " + dot_path);
        out << dot;
        std::cout << "nodes=" << g.nodes.size() << "\n"
                  << "covering_edges=" << g.covering_edges.size() << "\n"
                  << "dot=" << dot_path << "\n";
    } else {
        std::cout << dot;
    }
    return kExitTrue;
}

int cmd_catalog_export(const std::string& label, const std::string& param) {
    if (!catalog::has_label(label)) throw catalog::UnknownLabel(label);
    const catalog::Entry& e = catalog::entry(label);
    if (e.parametric && param.empty()) {
        std::cout << write_algebra_file(e.structure, label, "a");
        return kExitTrue;
    }
    std::optional<Rational> value;
    if (!param.empty()) {
        const auto eq = param.find('=');
        value = parse_rational(eq == std::string::npos ? param : param.substr(eq + 1));
    }
    const Algebra<Rational> a = catalog::load(label, value);
    std::cout << write_algebra_file(a, catalog::display_label(label, value));
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computer algebra for pre-Lie algebra degenerations"};
    app.require_subcommand(1);

    std::string file_a, file_b, file_w, param, param_a, param_b, weights, degree, maxij;
    std::string hasse_catalog = "dim2", dot_path, export_label;
    bool novikov = false;

    auto* check = app.add_subcommand("check", "pre-Lie / Novikov / commutative / associative flags");
    check->add_option("FILE", file_a)->required();

    auto* invariants = app.add_subcommand("invariants", "derivation, annihilator and orbit dimensions");
    invariants->add_option("FILE", file_a)->required();
    invariants->add_option("--param", param, "parameter value for parametric files");

    auto* derivs = app.add_subcommand("derivations", "weighted derivation space");
    derivs->add_option("FILE", file_a)->required();
    derivs->add_option("--param", param);
    derivs->add_option("--weights", weights, "alpha,beta,gamma (default 1,1,1)");

    auto* idents = app.add_subcommand("identities", "operator identity basis of one multidegree");
    idents->add_option("FILE", file_a)->required();
    idents->add_option("--param", param);
    idents->add_option("--degree", degree, "multidegree i,j (default 1,1)");

    auto* cij = app.add_subcommand("cij", "trace invariant table");
    cij->add_option("FILE", file_a)->required();
    cij->add_option("--param", param);
    cij->add_option("--max", maxij, "largest orders I,J (default 4,4)");

    auto* verify = app.add_subcommand("verify", "check a degeneration witness");
    verify->add_option("A_FILE", file_a)->required();
    verify->add_option("B_FILE", file_b)->required();
    verify->add_option("WITNESS_FILE", file_w)->required();
    verify->add_option("--param-a", param_a);
    verify->add_option("--param-b", param_b);

    auto* criteria = app.add_subcommand("criteria", "necessary degeneration criteria for an ordered pair");
    criteria->add_option("A_FILE", file_a)->required();
    criteria->add_option("B_FILE", file_b)->required();
    criteria->add_option("--param-a", param_a);
    criteria->add_option("--param-b", param_b);

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the built-in catalog");
    hasse->add_option("--catalog", hasse_catalog, "dim1 or dim2 (default dim2)");
    hasse->add_flag("--novikov", novikov, "restrict to the Novikov families");
    hasse->add_option("--dot", dot_path, "write DOT to this path instead of stdout");

    auto* cat = app.add_subcommand("catalog", "built-in catalog access");
    cat->require_subcommand(1);
    auto* cat_export = cat->add_subcommand("export", "print a catalog entry as an algebra file");
    cat_export->add_option("LABEL", export_label)->required();
    cat_export->add_option("--param", param, "parameter value, e.g. a=-2");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(file_a);
        if (*invariants) return cmd_invariants(file_a, param);
        if (*derivs) return cmd_derivations(file_a, param, weights);
        if (*idents) return cmd_identities(file_a, param, degree);
        if (*cij) return cmd_cij(file_a, param, maxij);
        if (*verify) return cmd_verify(file_a, file_b, file_w, param_a, param_b);
        if (*criteria) return cmd_criteria(file_a, file_b, param_a, param_b);
        if (*hasse) return cmd_hasse(hasse_catalog, novikov, dot_path);
        if (*cat_export) return cmd_catalog_export(export_label, param);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    std::cerr << "error: no subcommand\n";
    return kExitInputError;
}
