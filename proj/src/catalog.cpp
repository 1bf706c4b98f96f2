#include <prelie/catalog.hpp>

#include <algorithm>

namespace prelie {
namespace catalog {

namespace {

struct Product {
    int i, j, k;  // 1-based
    UniPoly c;
};

Algebra<UniPoly> build(int dim, const std::string& label, const std::vector<Product>& products) {
    Algebra<UniPoly> a(dim, label);
    for (const auto& p : products) a.at(p.i - 1, p.j - 1, p.k - 1) = p.c;
    return a;
}

std::vector<Entry> make_entries() {
    const UniPoly a = UniPoly::variable();
    std::vector<Entry> out;

    auto add = [&out](Entry e) { out.push_back(std::move(e)); };

    {
        Entry e{.label = "P1", .dim = 1, .structure = build(1, "P1", {})};
        e.der_dim = 1;
        e.commutative = e.associative = e.novikov = e.lie_abelian = true;
        add(e);
    }
    {
        Entry e{.label = "P2", .dim = 1, .structure = build(1, "P2", {{1, 1, 1, 1}})};
        e.der_dim = 0;
        e.commutative = e.associative = e.novikov = e.lie_abelian = true;
        add(e);
    }
    {
        Entry e{.label = "A1", .dim = 2, .structure = build(2, "A1", {})};
        e.der_dim = 4;
        e.commutative = e.associative = e.novikov = e.lie_abelian = true;
        add(e);
    }
    {
        Entry e{.label = "A2", .dim = 2, .structure = build(2, "A2", {{1, 1, 1, 1}})};
        e.der_dim = 1;
        e.commutative = e.associative = e.novikov = e.lie_abelian = true;
        add(e);
    }
    {
        Entry e{.label = "A3", .dim = 2, .structure = build(2, "A3", {{1, 1, 1, 1}, {2, 2, 2, 1}})};
        e.der_dim = 0;
        e.commutative = e.associative = e.novikov = e.lie_abelian = true;
        add(e);
    }
    {
        Entry e{.label = "A4", .dim = 2, .structure = build(2, "A4", {{1, 2, 1, 1}, {2, 1, 1, 1}, {2, 2, 2, 1}})};
        e.der_dim = 1;
        e.commutative = e.associative = e.novikov = e.lie_abelian = true;
        add(e);
    }
    {
        Entry e{.label = "A5", .dim = 2, .structure = build(2, "A5", {{2, 2, 1, 1}})};
        e.der_dim = 2;
        e.commutative = e.associative = e.novikov = e.lie_abelian = true;
        add(e);
    }
    {
        Entry e{.label = "B1", .dim = 2, .parametric = true,
                .structure = build(2, "B1", {{2, 1, 1, -1}, {2, 2, 2, a}})};
        e.der_dim = 1;
        e.der_dim_special = std::make_pair(Rational(-1), 2);
        e.commutative = false;
        e.associative_at = Rational(-1);
        e.novikov_at = Rational(0);  // B1(0) is isomorphic to B2(0)
        e.lie_abelian = false;
        add(e);
    }
    {
        Entry e{.label = "B2", .dim = 2, .parametric = true,
                .structure = build(2, "B2", {{1, 2, 1, a}, {2, 1, 1, a - UniPoly(1)}, {2, 2, 2, a}})};
        e.der_dim = 1;
        e.der_dim_special = std::make_pair(Rational(1), 2);
        e.commutative = false;
        e.associative_at = Rational(1);
        e.novikov = true;
        e.lie_abelian = false;
        add(e);
    }
    {
        Entry e{.label = "B3", .dim = 2, .structure = build(2, "B3", {{2, 1, 1, -1}, {2, 2, 1, 1}, {2, 2, 2, -1}})};
        e.der_dim = 1;
        e.commutative = e.associative = e.novikov = false;
        e.lie_abelian = false;
        add(e);
    }
    {
        Entry e{.label = "B4", .dim = 2, .structure = build(2, "B4", {{1, 1, 2, 1}, {2, 1, 1, -1}, {2, 2, 2, -2}})};
        e.der_dim = 0;
        e.commutative = e.associative = e.novikov = false;
        e.lie_abelian = false;
        add(e);
    }
    {
        Entry e{.label = "B5", .dim = 2, .structure = build(2, "B5", {{1, 2, 1, 1}, {2, 2, 1, 1}, {2, 2, 2, 1}})};
        e.der_dim = 1;
        e.commutative = e.associative = false;
        e.novikov = true;
        e.lie_abelian = false;
        add(e);
    }
    return out;
}

}  // namespace

const std::vector<Entry>& entries() {
    static const std::vector<Entry> all = make_entries();
    return all;
}

const Entry& entry(const std::string& label) {
    for (const auto& e : entries())
        if (e.label == label) return e;
    throw UnknownLabel(label);
}

bool has_label(const std::string& label) {
    return std::any_of(entries().begin(), entries().end(), [&](const Entry& e) { return e.label == label; });
}

int Entry::expected_der_dim(const std::optional<Rational>& param) const {
    if (der_dim_special && param && *param == der_dim_special->first) return der_dim_special->second;
    return der_dim;
}

bool Entry::expected_associative(const std::optional<Rational>& param) const {
    if (associative_at && param) return *param == *associative_at;
    return associative;
}

bool Entry::expected_novikov(const std::optional<Rational>& param) const {
    if (novikov) return true;
    if (novikov_at && param) return *param == *novikov_at;
    return false;
}

Algebra<Rational> load(const std::string& label, const std::optional<Rational>& param) {
    const Entry& e = entry(label);
    if (!e.parametric) {
        if (param) throw ForbiddenParameter(label + " takes no parameter");
        return instantiate(e.structure, 0);
    }
    if (!param) throw ForbiddenParameter(label + " requires a parameter value");
    if (e.label == "B2" && param->is_zero())
        throw ForbiddenParameter("B2(0) is excluded: it is isomorphic to B1(0)");
    Algebra<Rational> out = instantiate(e.structure, *param);
    out.label = display_label(label, param);
    return out;
}

Algebra<UniPoly> load_symbolic(const std::string& label) { return entry(label).structure; }

std::string display_label(const std::string& label, const std::optional<Rational>& param) {
    if (!param) return label;
    return label + "(" + to_string(*param) + ")";
}

namespace {

RatFunc rf(int c) { return RatFunc(Rational(c)); }

Witness fixed_witness(std::initializer_list<std::initializer_list<RatFunc>> rows) {
    const int n = static_cast<int>(rows.size());
    Matrix<RatFunc> m(n, n, RatFunc(0));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (const auto& x : row) m(i, j++) = x;
        ++i;
    }
    return Witness{m, true};
}

std::vector<WitnessSpec> make_witness_specs() {
    const RatFunc t = RatFunc::variable();
    const RatFunc t2 = t * t;
    std::vector<WitnessSpec> out;

    auto fixed = [&out](const std::string& src, const std::string& tgt, std::optional<Rational> tgt_param,
                        Witness w) {
        WitnessSpec s;
        s.source = src;
        s.target = tgt;
        s.target_param = tgt_param;
        s.make = [w](const Rational&) { return w; };
        out.push_back(std::move(s));
    };

    fixed("A3", "A2", std::nullopt, fixed_witness({{rf(1), rf(0)}, {t2, t}}));
    fixed("A3", "A4", std::nullopt, fixed_witness({{rf(0), rf(1)}, {t, rf(1)}}));
    fixed("A3", "A5", std::nullopt, fixed_witness({{t2 * rf(2), t * rf(2)}, {rf(0), t}}));
    fixed("B4", "B1", Rational(-2), fixed_witness({{t, rf(0)}, {t, rf(1)}}));
    fixed("B4", "B2", Rational(-1), fixed_witness({{rf(0), rf(-1)}, {t, rf(1)}}));
    fixed("B4", "A5", std::nullopt, fixed_witness({{rf(0), t * rf(2)}, {t2 * rf(3), t}}));
    fixed("A2", "A5", std::nullopt, fixed_witness({{rf(0), t}, {-t, rf(1)}}));
    fixed("A4", "A5", std::nullopt, fixed_witness({{t, rf(1)}, {rf(0), t}}));
    {
        WitnessSpec s;
        s.source = "B1";
        s.target = "A5";
        s.source_parametric = true;
        s.valid = [](const Rational& p) { return p != -1; };
        s.make = [t, t2](const Rational& p) {
            return fixed_witness({{rf(0), rf(1)}, {t2 * RatFunc(p + 1), t}});
        };
        out.push_back(std::move(s));
    }
    {
        WitnessSpec s;
        s.source = "B2";
        s.target = "A5";
        s.source_parametric = true;
        s.valid = [](const Rational& p) { return p != 1; };
        s.make = [t, t2](const Rational& p) {
            return fixed_witness({{rf(0), rf(1)}, {t2 * RatFunc(Rational(1) - p), t}});
        };
        out.push_back(std::move(s));
    }
    fixed("B3", "A5", std::nullopt, fixed_witness({{t2, rf(0)}, {rf(0), t}}));
    fixed("B3", "B1", Rational(-1), fixed_witness({{-t.inverse(), rf(0)}, {rf(0), rf(1)}}));
    fixed("B5", "A5", std::nullopt, fixed_witness({{t2, rf(0)}, {rf(0), t}}));
    fixed("B5", "B2", Rational(1), fixed_witness({{t.inverse(), rf(0)}, {rf(0), rf(1)}}));
    return out;
}

}  // namespace

const std::vector<WitnessSpec>& witness_specs() {
    static const std::vector<WitnessSpec> specs = make_witness_specs();
    return specs;
}

const std::vector<Rational>& b1_parameters() {
    static const std::vector<Rational> params = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                                 Rational(3)};
    return params;
}

const std::vector<Rational>& b2_parameters() {
    static const std::vector<Rational> params = {Rational(-1), Rational(1), Rational(2)};
    return params;
}

namespace {

Node make_node(const std::string& family, std::optional<Rational> param) {
    Node n;
    n.family = family;
    n.param = param;
    n.label = display_label(family, param);
    n.algebra = load(family, param);
    n.algebra.label = n.label;
    return n;
}

}  // namespace

std::vector<Node> dim2_nodes() {
    std::vector<Node> nodes;
    for (const char* label : {"A1", "A2", "A3", "A4", "A5"}) nodes.push_back(make_node(label, std::nullopt));
    for (const Rational& p : {Rational(-2), Rational(-1), Rational(0), Rational(3)}) nodes.push_back(make_node("B1", p));
    for (const Rational& p : {Rational(-1), Rational(1), Rational(2)}) nodes.push_back(make_node("B2", p));
    for (const char* label : {"B3", "B4", "B5"}) nodes.push_back(make_node(label, std::nullopt));
    return nodes;
}

std::vector<Node> dim2_novikov_nodes() {
    // The Novikov families: A1..A5, B2(beta), B5. B1 appears only through
    // its beta = 0 member, which duplicates the (excluded) B2(0) class.
    std::vector<Node> nodes;
    for (const char* label : {"A1", "A2", "A3", "A4", "A5"}) nodes.push_back(make_node(label, std::nullopt));
    for (const Rational& p : {Rational(-1), Rational(1), Rational(2)}) nodes.push_back(make_node("B2", p));
    nodes.push_back(make_node("B5", std::nullopt));
    return nodes;
}

std::vector<Node> dim1_nodes() {
    return {make_node("P1", std::nullopt), make_node("P2", std::nullopt)};
}

std::vector<LabeledWitness> witnesses_for(const std::vector<Node>& nodes) {
    auto find = [&nodes](const std::string& family, const std::optional<Rational>& param) -> const Node* {
        for (const auto& n : nodes) {
            if (n.family != family) continue;
            if (n.param == param) return &n;
        }
        return nullptr;
    };

    std::vector<LabeledWitness> out;
    for (const auto& spec : witness_specs()) {
        const Node* target = find(spec.target, spec.target_param);
        if (!target) continue;
        if (spec.source_parametric) {
            for (const auto& n : nodes) {
                if (n.family != spec.source || !n.param || !spec.valid(*n.param)) continue;
                out.push_back({n.label, target->label, spec.make(*n.param)});
            }
        } else {
            const Node* source = find(spec.source, std::nullopt);
            if (!source) continue;
            out.push_back({source->label, target->label, spec.make(Rational(0))});
        }
    }

    // Everything degenerates onto the zero algebra of the same dimension.
    const std::string zero_label = nodes.front().algebra.dim == 1 ? "P1" : "A1";
    const Node* zero = find(zero_label, std::nullopt);
    if (zero) {
        for (const auto& n : nodes) {
            if (n.label == zero->label) continue;
            out.push_back({n.label, zero->label, scaling_witness(n.algebra.dim)});
        }
    }
    return out;
}

}  // namespace catalog
}  // namespace prelie
