#include "g2forge/forms.hpp"

#include <algorithm>
#include <bit>

#include "g2forge/errors.hpp"
#include "text_parser.hpp"

namespace g2forge {

int popcount(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    for (int i = 0; i < 16; ++i)
        if (m & (1u << i)) out.push_back(i);
    return out;
}

Mask indices_mask(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= static_cast<Mask>(1u << i);
    return m;
}

KForm::KForm(int dim, int degree) : dim_(dim), deg_(degree) {
    if (dim < 1 || dim > 9) throw Error(ErrorKind::DimensionMismatch, "dimension must be 1..9");
    if (degree < 0 || degree > dim) throw Error(ErrorKind::DimensionMismatch, "degree out of range");
}

KForm KForm::basis(int dim, const std::vector<int>& one_based) {
    KForm f(dim, static_cast<int>(one_based.size()));
    KForm acc = KForm::scalar(dim, 1);
    for (int i : one_based) acc = wedge(acc, covector(dim, i));
    return acc.is_zero() ? f : acc;
}

KForm KForm::scalar(int dim, const QuadScalar& c) {
    KForm f(dim, 0);
    f.add_term(0, c);
    return f;
}

QuadScalar KForm::coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QuadScalar() : it->second;
}

QuadScalar KForm::coeff(const std::vector<int>& one_based) const {
    Mask m = 0;
    for (int i : one_based) m |= static_cast<Mask>(1u << (i - 1));
    return coeff(m);
}

void KForm::add_term(Mask m, const QuadScalar& c) {
    if (c.is_zero()) return;
    if (popcount(m) != deg_) throw Error(ErrorKind::DimensionMismatch, "term degree differs from form degree");
    if (m >> dim_) throw Error(ErrorKind::DimensionMismatch, "index beyond dimension");
    auto& slot = terms_[m];
    slot += c;
    if (slot.is_zero()) terms_.erase(m);
}

KForm& KForm::operator+=(const KForm& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && (deg_ != o.deg_ || dim_ != o.dim_)) {
        *this = o;
        return *this;
    }
    if (dim_ != o.dim_ || deg_ != o.deg_) throw Error(ErrorKind::DimensionMismatch, "adding forms of different shape");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) { return *this += -o; }

KForm& KForm::operator*=(const QuadScalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

bool operator==(const KForm& a, const KForm& b) {
    if (a.is_zero() && b.is_zero()) return a.dim_ == b.dim_;
    return a.dim_ == b.dim_ && a.deg_ == b.deg_ && a.terms_ == b.terms_;
}

namespace {

bool lex_less(Mask a, Mask b) { return mask_indices(a) < mask_indices(b); }

std::string mono_str(Mask m) {
    std::string s = "e";
    for (int i : mask_indices(m)) s += static_cast<char>('1' + i);
    return s;
}

int nonzero_components(const QuadScalar& c) {
    int n = 0;
    for (int i = 0; i < 4; ++i) n += c.component(i) != 0;
    return n;
}

}  // namespace

std::string KForm::str() const {
    if (terms_.empty()) return "0";
    if (deg_ == 0) return terms_.begin()->second.str();
    std::vector<Mask> keys;
    for (const auto& kv : terms_) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end(), lex_less);
    std::string out;
    for (Mask m : keys) {
        const QuadScalar& c = terms_.at(m);
        bool first = out.empty();
        std::string body;
        bool neg = false;
        if (nonzero_components(c) == 1) {
            neg = sign(c) < 0;
            QuadScalar mag = neg ? -c : c;
            body = (mag == QuadScalar(1)) ? mono_str(m) : mag.str() + "*" + mono_str(m);
        } else {
            body = "(" + c.str() + ")*" + mono_str(m);
        }
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        out += body;
    }
    return out;
}

int wedge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int count = 0;
    for (int j : mask_indices(b)) count += popcount(static_cast<Mask>(a >> (j + 1)));
    return (count % 2) ? -1 : 1;
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "wedge of forms on different spaces");
    int deg = a.degree() + b.degree();
    if (deg > a.dim()) return KForm(a.dim(), a.degree());
    KForm out(a.dim(), deg);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            QuadScalar c = ca * cb;
            out.add_term(ma | mb, s > 0 ? c : -c);
        }
    return out;
}

KForm contract(const Vec& x, const KForm& a) {
    if (static_cast<int>(x.size()) != a.dim()) throw Error(ErrorKind::DimensionMismatch, "contraction vector length");
    if (a.degree() == 0) return KForm(a.dim(), 0);
    KForm out(a.dim(), a.degree() - 1);
    for (const auto& [m, c] : a.terms())
        for (int i : mask_indices(m)) {
            if (x[i].is_zero()) continue;
            int below = popcount(static_cast<Mask>(m & ((1u << i) - 1)));
            QuadScalar v = x[i] * c;
            out.add_term(static_cast<Mask>(m & ~(1u << i)), below % 2 ? -v : v);
        }
    return out;
}

KForm hodge_star(const KForm& a, const Matrix& gram, int orientation) {
    int n = a.dim();
    if (static_cast<int>(gram.rows()) != n || static_cast<int>(gram.cols()) != n)
        throw Error(ErrorKind::DimensionMismatch, "gram size");
    if (!gram.is_diagonal()) throw Error(ErrorKind::NonDiagonalMetric, "hodge star needs a diagonal gram matrix");
    std::vector<QuadScalar> root(n), inv_root(n);
    for (int i = 0; i < n; ++i) {
        if (sign(gram(i, i)) <= 0) throw Error(ErrorKind::MetricNotRepresentable, "gram entry not positive");
        auto r = sqrt_if_exact(gram(i, i));
        if (!r) throw Error(ErrorKind::MetricNotRepresentable, "sqrt of gram entry " + gram(i, i).str() + " not in field");
        root[i] = *r;
        inv_root[i] = inverse(*r);
    }
    Mask full = static_cast<Mask>((1u << n) - 1);
    KForm out(n, n - a.degree());
    for (const auto& [m, c] : a.terms()) {
        Mask comp = full & ~m;
        QuadScalar f = c * QuadScalar(wedge_sign(m, comp) * orientation);
        for (int i : mask_indices(comp)) f *= root[i];
        for (int i : mask_indices(m)) f *= inv_root[i];
        out.add_term(comp, f);
    }
    return out;
}

KForm hodge_star(const KForm& a) { return hodge_star(a, Matrix::identity(a.dim()), 1); }

KForm covector(int dim, int one_based) {
    KForm f(dim, 1);
    f.add_term(static_cast<Mask>(1u << (one_based - 1)), 1);
    return f;
}

namespace {

// Apply a map on 1-forms (images[i] = image of e^{i+1}) multiplicatively.
KForm apply_on_monomials(const std::vector<KForm>& images, const KForm& a) {
    KForm out(a.dim(), a.degree());
    for (const auto& [m, c] : a.terms()) {
        KForm acc = KForm::scalar(a.dim(), c);
        for (int i : mask_indices(m)) acc = wedge(acc, images[i]);
        out += acc;
    }
    return out;
}

}  // namespace

KForm pullback_action(const LinearMap& h, const KForm& a) {
    int n = a.dim();
    if (static_cast<int>(h.rows()) != n || static_cast<int>(h.cols()) != n)
        throw Error(ErrorKind::DimensionMismatch, "map size");
    auto hinv = inverse(h);
    if (!hinv) throw Error(ErrorKind::SingularMap, "map is not invertible");
    std::vector<KForm> images;
    for (int i = 0; i < n; ++i) {
        KForm img(n, 1);
        for (int j = 0; j < n; ++j) img.add_term(static_cast<Mask>(1u << j), (*hinv)(i, j));
        images.push_back(img);
    }
    return apply_on_monomials(images, a);
}

KForm theta_action(const LinearMap& A, const KForm& a) {
    int n = a.dim();
    if (static_cast<int>(A.rows()) != n || static_cast<int>(A.cols()) != n)
        throw Error(ErrorKind::DimensionMismatch, "map size");
    KForm out(n, a.degree());
    for (const auto& [m, c] : a.terms()) {
        for (int i : mask_indices(m)) {
            Mask before = static_cast<Mask>(m & ((1u << i) - 1));
            Mask after = static_cast<Mask>(m & ~((1u << (i + 1)) - 1));
            for (int j = 0; j < n; ++j) {
                if (A(i, j).is_zero()) continue;
                Mask mj = static_cast<Mask>(1u << j);
                int s1 = wedge_sign(before, mj);
                if (s1 == 0) continue;
                int s2 = wedge_sign(before | mj, after);
                if (s2 == 0) continue;
                QuadScalar v = -(A(i, j) * c);
                out.add_term(before | mj | after, s1 * s2 > 0 ? v : -v);
            }
        }
    }
    return out;
}

QuadScalar form_inner(const KForm& a, const KForm& b) {
    QuadScalar s;
    for (const auto& [m, c] : a.terms()) s += c * b.coeff(m);
    return s;
}

std::vector<Mask> masks_of_degree(int dim, int degree) {
    std::vector<Mask> out;
    for (unsigned m = 0; m < (1u << dim); ++m)
        if (popcount(static_cast<Mask>(m)) == degree) out.push_back(static_cast<Mask>(m));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

Vec form_coordinates(const KForm& a) {
    Vec v;
    for (Mask m : masks_of_degree(a.dim(), a.degree())) v.push_back(a.coeff(m));
    return v;
}

KForm model_phi() { return parse_form("e127 + e347 + e567 + e135 - e146 - e236 - e245", 7); }

KForm parse_form(const std::string& text, int dim) {
    detail::TextParser p(text, dim);
    auto e = p.expression();
    if (!p.at_end()) p.fail("trailing input");
    KForm f(dim, e.degree);
    for (const auto& [m, c] : e.terms) f.add_term(m, c);
    return f;
}

}  // namespace g2forge
