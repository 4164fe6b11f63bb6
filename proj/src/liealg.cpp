#include "g2forge/liealg.hpp"

#include "g2forge/errors.hpp"
#include "text_parser.hpp"

namespace g2forge {

LieAlgebraData::LieAlgebraData(int dim, std::string name)
    : n_(dim), name_(std::move(name)), c_(static_cast<std::size_t>(dim) * dim * dim), gram_(Matrix::identity(dim)) {
    if (dim < 1 || dim > 9) throw Error(ErrorKind::DimensionMismatch, "algebra dimension must be 1..9");
}

LieAlgebraData LieAlgebraData::abelian(int dim) { return LieAlgebraData(dim, "abelian" + std::to_string(dim)); }

LieAlgebraData LieAlgebraData::from_brackets(int dim, const std::vector<Bracket>& br, std::string name) {
    LieAlgebraData a(dim, std::move(name));
    for (const auto& b : br) {
        if (b.i < 1 || b.i > dim || b.j < 1 || b.j > dim || b.k < 1 || b.k > dim)
            throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
        if (b.i == b.j) {
            if (!b.c.is_zero()) throw Error(ErrorKind::InvalidArgument, "[e_i, e_i] must vanish");
            continue;
        }
        a.set(b.i - 1, b.j - 1, b.k - 1, a.c(b.i - 1, b.j - 1, b.k - 1) + b.c);
    }
    return a;
}

void LieAlgebraData::set_gram(const Matrix& g) {
    if (static_cast<int>(g.rows()) != n_ || static_cast<int>(g.cols()) != n_)
        throw Error(ErrorKind::DimensionMismatch, "gram size");
    if (!g.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "gram must be symmetric");
    gram_ = g;
}

void LieAlgebraData::set(int i, int j, int k, const QuadScalar& value) {
    c_[(i * n_ + j) * n_ + k] = value;
    c_[(j * n_ + i) * n_ + k] = -value;
}

Vec LieAlgebraData::bracket_basis(int i, int j) const {
    Vec v(n_);
    for (int k = 0; k < n_; ++k) v[k] = c(i, j, k);
    return v;
}

Vec LieAlgebraData::bracket(const Vec& x, const Vec& y) const {
    Vec out(n_);
    for (int i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[j].is_zero() || i == j) continue;
            QuadScalar xy = x[i] * y[j];
            for (int k = 0; k < n_; ++k)
                if (!c(i, j, k).is_zero()) out[k] += xy * c(i, j, k);
        }
    }
    return out;
}

Matrix LieAlgebraData::ad(int i) const {
    Matrix m(n_, n_);
    for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) m(k, j) = c(i, j, k);
    return m;
}

Matrix LieAlgebraData::ad(const Vec& x) const {
    Matrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        if (!x[i].is_zero()) m += ad(i) * x[i];
    return m;
}

bool LieAlgebraData::is_abelian() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Bracket> LieAlgebraData::nonzero_brackets() const {
    std::vector<Bracket> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                if (!c(i, j, k).is_zero()) out.push_back({i + 1, j + 1, k + 1, c(i, j, k)});
    return out;
}

LieAlgebraData LieAlgebraData::scaled(const QuadScalar& s) const {
    LieAlgebraData a = *this;
    for (auto& x : a.c_) x *= s;
    return a;
}

JacobiResult validate(const LieAlgebraData& alg) {
    int n = alg.dim();
    JacobiResult r;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
                Vec s = alg.bracket(alg.bracket(ei, ej), ek);
                Vec t = alg.bracket(alg.bracket(ej, ek), ei);
                Vec u = alg.bracket(alg.bracket(ek, ei), ej);
                for (int m = 0; m < n; ++m) s[m] += t[m] + u[m];
                if (!is_zero(s)) {
                    r.ok = false;
                    r.triple = {i + 1, j + 1, k + 1};
                    r.defect = s;
                    return r;
                }
            }
    return r;
}

void require_valid(const LieAlgebraData& alg) {
    auto r = validate(alg);
    if (!r.ok)
        throw Error(ErrorKind::JacobiViolation, "Jacobi identity fails on (e" + std::to_string(r.triple[0]) + ", e" +
                                                    std::to_string(r.triple[1]) + ", e" + std::to_string(r.triple[2]) +
                                                    "): cyclic sum " + render_vector(r.defect));
}

namespace {

std::vector<KForm> differentials_of_basis(const LieAlgebraData& alg) {
    int n = alg.dim();
    std::vector<KForm> de;
    for (int i = 0; i < n; ++i) {
        KForm f(n, 2);
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const QuadScalar& c = alg.c(j, k, i);
                if (!c.is_zero()) f.add_term(static_cast<Mask>((1u << j) | (1u << k)), -c);
            }
        de.push_back(f);
    }
    return de;
}

KForm monomial(int dim, Mask m) {
    KForm f(dim, popcount(m));
    f.add_term(m, 1);
    return f;
}

}  // namespace

KForm ce_differential(const LieAlgebraData& alg, const KForm& a) {
    int n = alg.dim();
    if (a.dim() != n) throw Error(ErrorKind::DimensionMismatch, "form and algebra dimensions differ");
    if (a.degree() >= n) return KForm(n, n);
    auto de = differentials_of_basis(alg);
    KForm out(n, a.degree() + 1);
    for (const auto& [m, c] : a.terms()) {
        int r = 0;
        for (int i : mask_indices(m)) {
            Mask before = static_cast<Mask>(m & ((1u << i) - 1));
            Mask after = static_cast<Mask>(m & ~((1u << (i + 1)) - 1));
            if (!de[i].is_zero()) {
                KForm piece = wedge(wedge(monomial(n, before), de[i]), monomial(n, after));
                out += piece * (r % 2 ? -c : c);
            }
            ++r;
        }
    }
    return out;
}

bool d_squared_zero(const LieAlgebraData& alg) {
    int n = alg.dim();
    for (int k = 1; k < n - 1; ++k)
        for (Mask m : masks_of_degree(n, k)) {
            KForm f(n, k);
            f.add_term(m, 1);
            if (!ce_differential(alg, ce_differential(alg, f)).is_zero()) return false;
        }
    return true;
}

Predicates predicates(const LieAlgebraData& alg) {
    int n = alg.dim();
    Predicates p;

    // lower central series
    std::vector<Vec> span;
    for (int i = 0; i < n; ++i) span.push_back(unit_vector(n, i));
    std::size_t prev = n;
    for (;;) {
        std::vector<Vec> next;
        for (int i = 0; i < n; ++i)
            for (const auto& v : span) next.push_back(alg.bracket(unit_vector(n, i), v));
        if (next.empty()) break;
        Matrix m = Matrix::from_rows(next);
        auto piv = rref(m);
        span.clear();
        for (std::size_t r = 0; r < piv.size(); ++r) span.push_back(m.row(r));
        if (span.empty() || span.size() == prev) break;
        prev = span.size();
    }
    p.is_nilpotent = span.empty();

    p.is_unimodular = true;
    for (int i = 0; i < n; ++i)
        if (!alg.ad(i).trace().is_zero()) p.is_unimodular = false;

    bool single = true, orth = alg.gram().is_diagonal();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int count = 0, target = -1;
            for (int k = 0; k < n; ++k)
                if (!alg.c(i, j, k).is_zero()) {
                    ++count;
                    target = k;
                }
            if (count > 1) single = false;
            if (count == 1 && (target == i || target == j)) orth = false;
        }
    bool disjoint = true;
    for (int i = 0; i < n && disjoint; ++i)
        for (int k = 0; k < n && disjoint; ++k) {
            int hits = 0;
            for (int j = 0; j < n; ++j)
                if (j != i && !alg.c(i, j, k).is_zero()) ++hits;
            if (hits > 1) disjoint = false;
        }
    p.is_nice_basis = single && disjoint;
    p.is_orthogonally_nice = single && orth;
    return p;
}

LieAlgebraData parse_salamon(const std::string& text, int dim_hint) {
    // First pass: count entries to fix the dimension.
    int entries = 1, depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if (ch == ',' && depth == 1) ++entries;
    }
    int n = dim_hint > 0 ? dim_hint : entries;
    detail::TextParser p(text, n);
    p.expect('(');
    LieAlgebraData alg(n);
    int i = 0;
    for (;;) {
        if (i >= n) p.fail("more entries than the dimension " + std::to_string(n));
        std::size_t start = p.pos();
        auto e = p.expression();
        bool zero = e.terms.empty();
        if (!zero && e.degree != 2) throw ParseError(start, "each entry must be a 2-form or 0");
        for (const auto& [m, c] : e.terms) {
            auto idx = mask_indices(m);
            alg.set(idx[0], idx[1], i, -c);
        }
        ++i;
        if (p.accept(',')) continue;
        p.expect(')');
        break;
    }
    if (!p.at_end()) p.fail("trailing input after ')'");
    if (i != n) p.fail("expected " + std::to_string(n) + " entries, found " + std::to_string(i));
    require_valid(alg);
    return alg;
}

std::string render_salamon(const LieAlgebraData& alg) {
    int n = alg.dim();
    auto de = differentials_of_basis(alg);
    std::string s = "(";
    for (int i = 0; i < n; ++i) {
        if (i) s += ", ";
        s += de[i].str();
    }
    return s + ")";
}

nlohmann::json algebra_to_json(const LieAlgebraData& alg) {
    nlohmann::json j;
    j["dim"] = alg.dim();
    if (!alg.name().empty()) j["name"] = alg.name();
    j["brackets"] = nlohmann::json::array();
    for (const auto& b : alg.nonzero_brackets())
        j["brackets"].push_back({{"i", b.i}, {"j", b.j}, {"k", b.k}, {"c", b.c.str()}});
    if (alg.gram() != Matrix::identity(alg.dim())) {
        nlohmann::json g = nlohmann::json::array();
        for (int r = 0; r < alg.dim(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < alg.dim(); ++c) row.push_back(alg.gram()(r, c).str());
            g.push_back(row);
        }
        j["gram"] = g;
    }
    return j;
}

namespace {

QuadScalar json_scalar(const nlohmann::json& v) {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return QuadScalar(v.get<long>());
    throw Error(ErrorKind::InvalidArgument, "scalar must be a string or an integer, got " + v.dump());
}

}  // namespace

LieAlgebraData algebra_from_json(const nlohmann::json& j) {
    if (j.contains("salamon")) {
        auto a = parse_salamon(j.at("salamon").get<std::string>(), j.value("dim", 0));
        a.set_name(j.value("name", std::string()));
        return a;
    }
    int n = j.at("dim").get<int>();
    std::vector<Bracket> br;
    for (const auto& b : j.value("brackets", nlohmann::json::array()))
        br.push_back({b.at("i").get<int>(), b.at("j").get<int>(), b.at("k").get<int>(), json_scalar(b.at("c"))});
    auto a = LieAlgebraData::from_brackets(n, br, j.value("name", std::string()));
    if (j.contains("gram")) {
        const auto& g = j.at("gram");
        Matrix m(n, n);
        if (g.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::DimensionMismatch, "gram size");
        for (int r = 0; r < n; ++r) {
            if (g[r].is_array()) {
                for (int c = 0; c < n; ++c) m(r, c) = json_scalar(g[r][c]);
            } else {
                m(r, r) = json_scalar(g[r]);
            }
        }
        a.set_gram(m);
    }
    require_valid(a);
    return a;
}

bool is_bracket_homomorphism(const LinearMap& h, const LieAlgebraData& a, const LieAlgebraData& b) {
    int n = a.dim();
    if (b.dim() != n || static_cast<int>(h.rows()) != n || static_cast<int>(h.cols()) != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec lhs = h * a.bracket_basis(i, j);
            Vec rhs = b.bracket(h.column(i), h.column(j));
            if (lhs != rhs) return false;
        }
    return true;
}

LieAlgebraData transport(const LinearMap& h, const LieAlgebraData& a) {
    int n = a.dim();
    auto hinv = inverse(h);
    if (!hinv) throw Error(ErrorKind::SingularMap, "transport by a singular map");
    LieAlgebraData b(n, a.name());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec v = h * a.bracket(hinv->column(i), hinv->column(j));
            for (int k = 0; k < n; ++k) b.set(i, j, k, v[k]);
        }
    return b;
}

}  // namespace g2forge
