#include "atlas/tensormod.hpp"

#include "atlas/rootsys.hpp"

#include <cctype>

namespace atlas {

SignTuple tuple_from_string(std::string_view s)
{
    if (s.size() != 4)
        throw ParseError("sign tuple must have 4 signs");
    SignTuple t = 0;
    for (int k = 0; k < 4; ++k) {
        if (s[k] == '-')
            t |= 1 << (3 - k);
        else if (s[k] != '+')
            throw ParseError("bad sign character");
    }
    return t;
}

std::string tuple_string(SignTuple t)
{
    std::string s;
    for (int k = 0; k < 4; ++k)
        s += tuple_bit(t, k) ? '-' : '+';
    return s;
}

TensorElement TensorElement::basis(SignTuple t, const Q& c)
{
    TensorElement v;
    v.c_[t] = c;
    return v;
}

bool TensorElement::is_zero() const { return support_size() == 0; }

int TensorElement::support_size() const
{
    int n = 0;
    for (const auto& x : c_)
        if (sgn(x) != 0)
            ++n;
    return n;
}

TensorElement TensorElement::operator+(const TensorElement& o) const
{
    TensorElement r = *this;
    for (int t = 0; t < 16; ++t)
        r.c_[t] += o.c_[t];
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const
{
    TensorElement r = *this;
    for (int t = 0; t < 16; ++t)
        r.c_[t] -= o.c_[t];
    return r;
}

TensorElement TensorElement::operator*(const Q& s) const
{
    TensorElement r = *this;
    for (auto& x : r.c_)
        x *= s;
    return r;
}

bool TensorElement::operator<(const TensorElement& o) const
{
    for (int t = 0; t < 16; ++t)
        if (c_[t] != o.c_[t])
            return cmp(c_[t], o.c_[t]) < 0;
    return false;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    TensorElement run()
    {
        TensorElement v;
        ws();
        if (at_end())
            throw ParseError("empty expression");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            // a leading sign is accepted when it precedes a coefficient or a tuple
            sign = get() == '-' ? -1 : 1;
            ws();
        }
        term(v, sign);
        for (;;) {
            ws();
            if (at_end())
                break;
            char c = get();
            if (c != '+' && c != '-')
                throw ParseError(std::string("expected '+' or '-' at offset ") + std::to_string(pos_ - 1));
            ws();
            term(v, c == '-' ? -1 : 1);
        }
        return v;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    void ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    mpz_class integer()
    {
        size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }
    void term(TensorElement& v, int sign)
    {
        Q coeff = 1;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = integer(), den = 1;
            if (!at_end() && peek() == '/') {
                ++pos_;
                den = integer();
                if (den == 0)
                    throw ParseError("zero denominator");
            }
            coeff = Q(num, den);
            coeff.canonicalize();
            ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                ws();
            }
        }
        if (at_end() || get() != '(')
            throw ParseError("expected '('");
        std::string signs;
        bool comma = false;
        for (;;) {
            ws();
            if (at_end())
                throw ParseError("unterminated tuple");
            char c = get();
            if (c == ')' && !comma)
                break;
            if (c == ',' && !signs.empty() && !comma) {
                comma = true;
                continue;
            }
            if (c != '+' && c != '-')
                throw ParseError(std::string("unexpected character '") + c + "' in tuple");
            signs += c;
            comma = false;
        }
        if (signs.size() != 4)
            throw ParseError("tuple arity " + std::to_string(signs.size()) + ", expected 4");
        v[tuple_from_string(signs)] += coeff * sign;
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

TensorElement parse_sign_expr(std::string_view s) { return Parser(s).run(); }

std::string to_string(const TensorElement& v)
{
    std::string out;
    for (int t = 0; t < 16; ++t) {
        const Q& c = v[t];
        if (sgn(c) == 0)
            continue;
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        Q a = abs(c);
        if (a != 1)
            out += a.get_str() + "*";
        out += "(" + tuple_string(t) + ")";
    }
    return out.empty() ? "0" : out;
}

QMatrix mat2(const Q& a, const Q& b, const Q& c, const Q& d)
{
    QMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

GroupElement4 GroupElement4::identity()
{
    GroupElement4 g;
    for (auto& m : g.g)
        m = QMatrix::identity(2);
    return g;
}

bool GroupElement4::unimodular() const
{
    for (const auto& m : g)
        if (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) != 1)
            return false;
    return true;
}

GroupElement4 GroupElement4::inverse() const
{
    GroupElement4 r;
    for (int k = 0; k < 4; ++k) {
        const auto& m = g[k];
        Q det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        r.g[k] = mat2(m(1, 1) / det, -m(0, 1) / det, -m(1, 0) / det, m(0, 0) / det);
    }
    return r;
}

GroupElement4 GroupElement4::operator*(const GroupElement4& o) const
{
    GroupElement4 r;
    for (int k = 0; k < 4; ++k)
        r.g[k] = g[k] * o.g[k];
    return r;
}

std::string to_string(const GroupElement4& g)
{
    std::string s;
    for (int k = 0; k < 4; ++k) {
        const auto& m = g.g[k];
        s += (k ? " x " : "") + std::string("[[") + m(0, 0).get_str() + "," + m(0, 1).get_str() + "],[" +
             m(1, 0).get_str() + "," + m(1, 1).get_str() + "]]";
    }
    return s;
}

TensorElement act(const GroupElement4& g, const TensorElement& v)
{
    TensorElement cur = v;
    for (int k = 0; k < 4; ++k) {
        TensorElement next;
        int shift = 3 - k;
        for (int t = 0; t < 16; ++t) {
            const Q& c = cur[t];
            if (sgn(c) == 0)
                continue;
            int old = (t >> shift) & 1;
            for (int nw = 0; nw < 2; ++nw) {
                const Q& m = g.g[k](nw, old);
                if (sgn(m) == 0)
                    continue;
                int t2 = (t & ~(1 << shift)) | (nw << shift);
                next[t2] += m * c;
            }
        }
        cur = next;
    }
    return cur;
}

static std::array<QMatrix, 16> build_sigma()
{
    const auto& m = model();
    const auto& ft = factor_triples();
    std::array<QMatrix, 16> sig;
    std::array<bool, 16> done{};
    sig[15] = bracket(m.f[1], m.f[2]);
    done[15] = true;
    // raise by increasing number of '+': sigma(t) = [E_k, sigma(t with '-' at k)], k the first '+'
    for (int plus = 1; plus <= 4; ++plus)
        for (int t = 0; t < 16; ++t) {
            int np = 0;
            for (int k = 0; k < 4; ++k)
                np += tuple_bit(t, k) == 0;
            if (np != plus || done[t])
                continue;
            int k = 0;
            while (tuple_bit(t, k))
                ++k;
            int src = t | (1 << (3 - k));
            sig[t] = bracket(ft[k].E, sig[src]);
            done[t] = true;
        }
    return sig;
}

const std::array<QMatrix, 16>& sigma_basis()
{
    static const std::array<QMatrix, 16> s = build_sigma();
    return s;
}

QMatrix sigma(const TensorElement& v)
{
    const auto& sb = sigma_basis();
    QMatrix x = zero8();
    for (int t = 0; t < 16; ++t)
        if (sgn(v[t]) != 0)
            x = x + scale(sb[t], v[t]);
    return x;
}

TensorElement sigma_inverse(const QMatrix& x)
{
    const auto& sb = sigma_basis();
    auto c = coords(x, std::vector<QMatrix>(sb.begin(), sb.end()));
    if (!c)
        throw std::invalid_argument("sigma_inverse: element not in g1");
    TensorElement v;
    for (int t = 0; t < 16; ++t)
        v[t] = (*c)[t];
    return v;
}

QMatrix lift_to_g0_action(const GroupElement4& g, const QMatrix& x) { return sigma(act(g, sigma_inverse(x))); }

TensorElement derive(const std::array<QMatrix, 4>& a, const TensorElement& v)
{
    TensorElement out;
    for (int k = 0; k < 4; ++k) {
        int shift = 3 - k;
        for (int t = 0; t < 16; ++t) {
            if (sgn(v[t]) == 0)
                continue;
            int old = (t >> shift) & 1;
            for (int nw = 0; nw < 2; ++nw)
                if (sgn(a[k](nw, old)) != 0)
                    out[(t & ~(1 << shift)) | (nw << shift)] += a[k](nw, old) * v[t];
        }
    }
    return out;
}

std::array<QMatrix, 4> g0_factor_matrices(const QMatrix& x)
{
    if (!in_span(x, model().g0))
        throw std::invalid_argument("g0_factor_matrices: element outside g0");
    const auto& sb = sigma_basis();
    auto d = [&](int t) { return sigma_inverse(bracket(x, sb[t])); };
    TensorElement d0 = d(0);
    std::array<QMatrix, 4> a;
    for (int k = 0; k < 4; ++k) {
        int bit = 1 << (3 - k);
        Q diag = (d0[0] - d(bit)[bit]) / 2;
        a[k] = mat2(diag, d(bit)[0], d0[bit], -diag);
    }
    for (int t = 0; t < 16; ++t)
        if (!(derive(a, TensorElement::basis(t)) == d(t)))
            throw std::logic_error("g0_factor_matrices: action is not factor-wise");
    return a;
}

QMatrix exp_ad(const QMatrix& u, const Q& t, const QMatrix& x)
{
    QMatrix sum = x, term = x;
    for (int n = 1; n <= 16; ++n) {
        term = scale(bracket(u, term), t / n);
        if (term.is_zero())
            return sum;
        sum = sum + term;
    }
    throw std::invalid_argument("exp_ad: u is not ad-nilpotent");
}

// diag(lambda, 1/lambda) in factor k acts on ad(H_k)-weight w by lambda^w
static QMatrix torus_action(int k, const Q& lambda, const QMatrix& x)
{
    const auto& ft = factor_triples();
    QMatrix out = zero8();
    QMatrix rest = x;
    // spectral projectors of ad(H_k)
    std::vector<int> ws = {-2, -1, 0, 1, 2};
    for (int w : ws) {
        QMatrix part = x;
        Q denom = 1;
        for (int u : ws) {
            if (u == w)
                continue;
            part = bracket(ft[k].H, part) - scale(part, u);
            denom *= (w - u);
        }
        part = scale(part, 1 / denom);
        if (part.is_zero())
            continue;
        Q f = 1;
        if (w > 0)
            for (int i = 0; i < w; ++i)
                f *= lambda;
        else
            for (int i = 0; i < -w; ++i)
                f /= lambda;
        out = out + scale(part, f);
        rest = rest - part;
    }
    if (!rest.is_zero())
        throw std::logic_error("torus_action: ad(H) spectrum outside [-2,2]");
    return out;
}

QMatrix adjoint_action(const GroupElement4& g, const QMatrix& x)
{
    const auto& ft = factor_triples();
    QMatrix y = x;
    for (int k = 0; k < 4; ++k) {
        const auto& m = g.g[k];
        const Q &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
        // apply the rightmost factor first
        if (sgn(c) != 0) {
            // [[a,b],[c,d]] = U((a-1)/c) L(c) U((d-1)/c)
            y = exp_ad(ft[k].E, (d - 1) / c, y);
            y = exp_ad(ft[k].F, c, y);
            y = exp_ad(ft[k].E, (a - 1) / c, y);
        } else {
            // [[a,b],[0,d]] = diag(a, 1/a) U(b/a)
            y = exp_ad(ft[k].E, b / a, y);
            y = torus_action(k, a, y);
        }
    }
    return y;
}

}  // namespace atlas
