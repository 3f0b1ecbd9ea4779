#include "atlas/classify.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace atlas {

const InvariantTensors& invariant_tensors()
{
    static const InvariantTensors it = [] {
        InvariantTensors r;
        r.epsilon = mat2(0, 1, -1, 0);
        r.pauli = {mat2(0, 1, 1, 0), mat2(0, 1, -1, 0), mat2(1, 0, 0, -1)};
        r.eta = QMatrix(3, 3);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                QMatrix p = r.pauli[x] * r.pauli[y];
                r.eta(x, y) = p(0, 0) + p(1, 1);
            }
        r.eta_inv = *inverse(r.eta);
        return r;
    }();
    return it;
}

namespace {

int idx4(const std::array<int, 4>& i) { return (i[0] << 3) | (i[1] << 2) | (i[2] << 1) | i[3]; }

}  // namespace

QMatrix quadratic_classifier(const TensorElement& v, int i, int j)
{
    if (i == j || i < 0 || j < 0 || i > 3 || j > 3)
        throw std::invalid_argument("quadratic_classifier: need two distinct factors");
    if (i > j)
        std::swap(i, j);
    const auto& eps = invariant_tensors().epsilon;
    int o[2], n = 0;
    for (int k = 0; k < 4; ++k)
        if (k != i && k != j)
            o[n++] = k;
    auto w = [&](int a, int b, int c, int d) {
        Q s = 0;
        for (int x3 = 0; x3 < 2; ++x3)
            for (int x4 = 0; x4 < 2; ++x4) {
                int y3 = 1 - x3, y4 = 1 - x4;
                Q e = eps(x3, y3) * eps(x4, y4);
                std::array<int, 4> i1{}, i2{};
                i1[i] = a, i1[j] = b, i1[o[0]] = x3, i1[o[1]] = x4;
                i2[i] = c, i2[j] = d, i2[o[0]] = y3, i2[o[1]] = y4;
                const Q &p = v[idx4(i1)], &q = v[idx4(i2)];
                if (sgn(p) != 0 && sgn(q) != 0)
                    s += e * p * q;
            }
        return s;
    };
    static const std::array<std::pair<int, int>, 4> I = {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
    QMatrix T(4, 4);
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
            auto [a1, a2] = I[p];
            auto [b1, b2] = I[q];
            T(p, q) = (w(a1, a2, b1, b2) + w(b1, a2, a1, b2) + w(a1, b2, b1, a2) + w(b1, b2, a1, a2)) / 4;
        }
    return T;
}

namespace {

// S_{x a b} = S_x{}_a{}^g eps_{g b}
using SL = std::array<std::array<std::array<Q, 2>, 2>, 3>;

const SL& lowered_pauli()
{
    static const SL s = [] {
        const auto& it = invariant_tensors();
        SL r;
        for (int x = 0; x < 3; ++x)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    Q t = 0;
                    for (int g = 0; g < 2; ++g)
                        t += it.pauli[x](a, g) * it.epsilon(g, b);
                    r[x][a][b] = t;
                }
        return r;
    }();
    return s;
}

// T_{x1..x4}(v), index x1*27 + x2*9 + x3*3 + x4
std::vector<Q> quartic_base(const TensorElement& v)
{
    const auto& sl = lowered_pauli();
    std::vector<int> supp;
    for (int t = 0; t < 16; ++t)
        if (sgn(v[t]) != 0)
            supp.push_back(t);
    std::vector<Q> out(81);
    for (int xs = 0; xs < 81; ++xs) {
        int x[4] = {xs / 27, (xs / 9) % 3, (xs / 3) % 3, xs % 3};
        Q s = 0;
        for (int a : supp)
            for (int b : supp) {
                Q p = v[a] * v[b];
                for (int k = 0; k < 4 && sgn(p) != 0; ++k)
                    p *= sl[x[k]][tuple_bit(a, k)][tuple_bit(b, k)];
                if (sgn(p) != 0)
                    s += p;
            }
        out[xs] = s;
    }
    return out;
}

constexpr std::array<std::array<int, 3>, 4> kTriples = {{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

Q proj(char kind, int x, int y, int xp, int yp)
{
    const auto& it = invariant_tensors();
    auto d = [](int a, int b) { return a == b ? 1 : 0; };
    if (kind == 'S')
        return Q(d(x, xp) * d(y, yp) + d(x, yp) * d(y, xp), 2) - it.eta(x, y) * it.eta_inv(xp, yp) / 3;
    return Q(d(x, xp) * d(y, yp) - d(x, yp) * d(y, xp), 2);
}

std::vector<QMatrix> quartic_with_kinds(const TensorElement& v, const std::vector<std::string>& kinds)
{
    const auto& it = invariant_tensors();
    auto t = quartic_base(v);
    std::vector<QMatrix> res;
    for (const auto& tri : kTriples) {
        int c = 6 - tri[0] - tri[1] - tri[2];
        auto key = [&](int u, int z) {
            int x[4];
            x[tri[0]] = u / 9, x[tri[1]] = (u / 3) % 3, x[tri[2]] = u % 3, x[c] = z;
            return x[0] * 27 + x[1] * 9 + x[2] * 3 + x[3];
        };
        QMatrix base(27, 27);
        for (int u = 0; u < 27; ++u)
            for (int w = 0; w < 27; ++w) {
                Q s = 0;
                for (int z = 0; z < 3; ++z)
                    s += t[key(u, z)] * t[key(w, z)] * it.eta_inv(z, z);
                base(u, w) = s;
            }
        static const int pw[3] = {9, 3, 1};
        for (const auto& kind : kinds) {
            QMatrix cur = base;
            for (int pos = 0; pos < 3; ++pos) {
                QMatrix nxt(27, 27);
                for (int u = 0; u < 27; ++u)
                    for (int w = 0; w < 27; ++w) {
                        int up = (u / pw[pos]) % 3, wp = (w / pw[pos]) % 3;
                        Q s = 0;
                        for (int xp = 0; xp < 3; ++xp)
                            for (int yp = 0; yp < 3; ++yp) {
                                Q pr = proj(kind[pos], up, wp, xp, yp);
                                if (sgn(pr) == 0)
                                    continue;
                                int u2 = u + (xp - up) * pw[pos], w2 = w + (yp - wp) * pw[pos];
                                s += pr * cur(u2, w2);
                            }
                        nxt(u, w) = s;
                    }
                cur = nxt;
            }
            res.push_back(cur);
        }
    }
    return res;
}

}  // namespace

std::vector<QMatrix> quartic_classifiers(const TensorElement& v)
{
    return quartic_with_kinds(v, {"SSS", "SAA", "ASA", "AAS"});
}

std::vector<QMatrix> quartic_odd_projections(const TensorElement& v)
{
    return quartic_with_kinds(v, {"AAA", "ASS", "SAS", "SSA"});
}

Fingerprint quadratic_fingerprint(const TensorElement& v)
{
    Fingerprint f;
    for (size_t p = 0; p < kPairs.size(); ++p)
        f[p] = symmetric_signature(quadratic_classifier(v, kPairs[p].first, kPairs[p].second));
    return f;
}

std::vector<Signature> quartic_fingerprint(const TensorElement& v)
{
    std::vector<Signature> s;
    for (const auto& m : quartic_classifiers(v))
        s.push_back(symmetric_signature(m));
    return s;
}

int complex_class_of(const Label& alpha, const Label& gamma)
{
    int a = alpha_index(alpha);
    int g = gamma_index(a, gamma);
    if (a == 0 || g == 0)
        return 0;
    for (const auto& r : table1())
        if (r.alpha == a && r.gamma == g)
            return r.row;
    return 0;
}

OrbitRecord fingerprint(const TensorElement& rep)
{
    if (rep.is_zero())
        throw std::invalid_argument("fingerprint: zero element");
    QMatrix x = sigma(rep);
    if (!is_nilpotent(x))
        throw std::invalid_argument("fingerprint: element is not nilpotent");
    Sl2Triple t = complete_to_sl2(x);
    OrbitRecord r;
    r.rep = rep;
    r.dim = orbit_dim(x);
    r.alpha = alpha_label(t.h);
    r.gamma = gamma_label(t.h);
    r.beta = beta_label(t);
    r.alpha_k = alpha_index(r.alpha);
    r.gamma_k = gamma_index(r.alpha_k, r.gamma);
    r.beta_k = gamma_index(r.alpha_k, r.beta);
    r.complex_class = complex_class_of(r.alpha, r.gamma);
    r.signatures = quadratic_fingerprint(rep);
    return r;
}

static void warm_up()
{
    (void)model();
    (void)roots();
    (void)weyl_W();
    (void)weyl_W0();
    (void)factor_triples();
    (void)sigma_basis();
    (void)root_vector({1, 0, 0, 0});
    (void)invariant_tensors();
    (void)table1();
}

std::vector<OrbitRecord> fingerprint_all_serial(const std::vector<TensorElement>& reps)
{
    std::vector<OrbitRecord> out;
    out.reserve(reps.size());
    for (const auto& v : reps)
        out.push_back(fingerprint(v));
    return out;
}

std::vector<OrbitRecord> fingerprint_all_parallel(const std::vector<TensorElement>& reps)
{
    warm_up();
    std::vector<OrbitRecord> out(reps.size());
    std::vector<std::string> errors(reps.size());
    long n = static_cast<long>(reps.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            out[i] = fingerprint(reps[i]);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty())
            throw std::invalid_argument(e);
    return out;
}

std::vector<OrbitRecord> assign_delta(std::vector<OrbitRecord> records)
{
    std::map<std::tuple<Label, Label, Label>, std::vector<size_t>> groups;
    for (size_t i = 0; i < records.size(); ++i) {
        records[i].delta.reset();
        groups[{records[i].alpha, records[i].gamma, records[i].beta}].push_back(i);
    }
    for (auto& [k, idx] : groups) {
        if (idx.size() < 2)
            continue;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            if (records[a].signatures != records[b].signatures)
                return records[a].signatures < records[b].signatures;
            return records[a].rep < records[b].rep;
        });
        for (size_t d = 0; d < idx.size(); ++d)
            records[idx[d]].delta = static_cast<int>(d) + 1;
    }
    std::stable_sort(records.begin(), records.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        if (a.complex_class != b.complex_class)
            return a.complex_class < b.complex_class;
        return a.rep < b.rep;
    });
    return records;
}

MergeResult merge_to_gprime(const std::vector<OrbitRecord>& records)
{
    MergeResult m;
    std::set<std::tuple<int, Label, Label>> seen;
    for (const auto& r : records) {
        if (r.alpha_k >= 7 && r.alpha_k <= 11 && r.delta) {
            auto key = std::make_tuple(r.complex_class, r.gamma, r.beta);
            if (!seen.insert(key).second)
                continue;
            OrbitRecord c = r;
            c.delta.reset();
            m.records.push_back(c);
        } else {
            m.records.push_back(r);
        }
    }
    m.count = static_cast<int>(m.records.size());
    return m;
}

namespace {

std::vector<std::string> insertions(const std::string& tok)
{
    if (tok.size() == 4)
        return {tok};
    if (tok.size() != 3)
        throw std::invalid_argument("repair: printed token must have 3 or 4 signs");
    std::set<std::string> out;
    for (size_t p = 0; p <= 3; ++p)
        for (char s : {'+', '-'})
            out.insert(tok.substr(0, p) + s + tok.substr(p));
    return {out.begin(), out.end()};
}

bool labels_match(const TensorElement& v, const RepairTarget& t, Label* beta)
{
    QMatrix x = sigma(v);
    if (!is_nilpotent(x))
        return false;
    if (t.dim && orbit_dim(x) != t.dim)
        return false;
    Sl2Triple tr = complete_to_sl2(x);
    if (alpha_label(tr.h) != t.alpha || gamma_label(tr.h) != t.gamma)
        return false;
    *beta = beta_label(tr);
    return true;
}

}  // namespace

RepairResult repair_table_row(const RepairTarget& target, int support_bound)
{
    int a = alpha_index(target.alpha);
    if (a == 0 || gamma_index(a, target.gamma) == 0)
        throw std::runtime_error("repair: target labels are not in Table II");
    for (const auto& b : target.betas)
        if (gamma_index(a, b) == 0)
            throw std::runtime_error("repair: target beta is not in Table II");
    std::set<Label> want(target.betas.begin(), target.betas.end());

    RepairResult res;
    if (!target.printed.empty()) {
        std::vector<std::vector<std::string>> opts;
        for (const auto& tok : target.printed)
            opts.push_back(insertions(tok));
        std::vector<size_t> pos(opts.size(), 0);
        for (;;) {
            std::vector<std::string> combo;
            for (size_t i = 0; i < opts.size(); ++i)
                combo.push_back(opts[i][pos[i]]);
            if (std::set<std::string>(combo.begin(), combo.end()).size() == combo.size()) {
                TableIRow row{0, 0, 0, 0, 0, "", combo, {}, 0, ""};
                bool ok = true;
                std::set<Label> got;
                for (const auto& v : expand_row(row)) {
                    Label b;
                    if (!labels_match(v, target, &b)) {
                        ok = false;
                        break;
                    }
                    got.insert(b);
                }
                if (ok) {
                    ++res.candidates_labels;
                    bool beta_ok = want.empty() || got == want;
                    if (beta_ok) {
                        ++res.candidates_valid;
                        if (res.support.empty())
                            res.support = combo;
                    }
                }
            }
            int k = static_cast<int>(opts.size()) - 1;
            while (k >= 0 && ++pos[k] == opts[k].size())
                pos[k--] = 0;
            if (k < 0)
                break;
        }
        if (res.support.empty())
            throw std::runtime_error("repair: no insertion matches the target");
        res.element = expand_row(TableIRow{0, 0, 0, 0, 0, "", res.support, {}, 0, ""})[0];
        return res;
    }

    // free search over single elements with +-1 coefficients, leading coefficient +1
    for (int n = 1; n <= support_bound; ++n) {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i)
            c[i] = i;
        for (;;) {
            for (int s = 0; s < (1 << (n - 1)); ++s) {
                TensorElement v = TensorElement::basis(c[0]);
                for (int i = 1; i < n; ++i)
                    v[c[i]] = ((s >> (n - 1 - i)) & 1) ? -1 : 1;
                Label b;
                if (labels_match(v, target, &b) && (want.empty() || want.count(b))) {
                    for (int i = 0; i < n; ++i)
                        res.support.push_back(tuple_string(c[i]));
                    res.element = v;
                    res.candidates_valid = res.candidates_labels = 1;
                    return res;
                }
            }
            int i = n - 1;
            while (i >= 0 && c[i] == 16 - n + i)
                --i;
            if (i < 0)
                break;
            ++c[i];
            for (int k = i + 1; k < n; ++k)
                c[k] = c[k - 1] + 1;
        }
    }
    throw std::runtime_error("repair: no element within the support bound matches the target");
}

std::string fingerprint_string(const Fingerprint& f)
{
    std::string s;
    for (size_t i = 0; i < f.size(); ++i)
        s += (i ? "," : "") + to_string(f[i]);
    return s;
}

std::string to_json(const std::vector<OrbitRecord>& records)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["complex_class"] = r.complex_class;
        j["dim"] = r.dim;
        j["rep"] = to_string(r.rep);
        j["alpha"] = r.alpha;
        j["gamma"] = r.gamma;
        j["beta"] = r.beta;
        j["delta"] = r.delta ? nlohmann::ordered_json(*r.delta) : nlohmann::ordered_json(nullptr);
        auto sigs = nlohmann::ordered_json::array();
        for (const auto& s : r.signatures)
            sigs.push_back({s.plus, s.minus});
        j["signatures"] = sigs;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string to_tsv(const std::vector<OrbitRecord>& records)
{
    std::ostringstream os;
    os << "complex_class\tdim\trep\talpha\tgamma\tbeta\tdelta\tsignatures\n";
    for (const auto& r : records) {
        os << r.complex_class << '\t' << r.dim << '\t' << to_string(r.rep) << '\t' << label_string(r.alpha) << '\t'
           << label_string(r.gamma) << '\t' << label_string(r.beta) << '\t' << (r.delta ? std::to_string(*r.delta) : "")
           << '\t' << fingerprint_string(r.signatures) << '\n';
    }
    return os.str();
}

}  // namespace atlas
