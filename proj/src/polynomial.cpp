#include "avalanche/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "avalanche/graph.hpp"

namespace avalanche {

MultiPoly::MultiPoly(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly MultiPoly::constant(int n_vars, const BigInt& c) {
    MultiPoly p(n_vars);
    p.add_term(Exponents(n_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(const Exponents& exp, const BigInt& coef) {
    MultiPoly p(static_cast<int>(exp.size()));
    p.add_term(exp, coef);
    return p;
}

MultiPoly MultiPoly::variable(int n_vars, int index) {
    if (index < 0 || index >= n_vars) throw std::invalid_argument("variable index out of range");
    Exponents e(n_vars, 0);
    e[index] = 1;
    return monomial(e, 1);
}

BigInt MultiPoly::coefficient(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // first term is maximal in graded order
    const Exponents& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0L);
}

BigInt MultiPoly::evaluate_ones() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::vector<int> MultiPoly::support() const {
    std::set<int> vars;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < n_vars_; ++i)
            if (e[i] > 0) vars.insert(i);
    return {vars.begin(), vars.end()};
}

void MultiPoly::add_term(const Exponents& exp, const BigInt& coef) {
    if (static_cast<int>(exp.size()) != n_vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    for (int e : exp)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (n_vars_ != o.n_vars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (n_vars_ != o.n_vars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (n_vars_ != o.n_vars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r(n_vars_);
    Exponents sum(n_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < n_vars_; ++i) sum[i] = ea[i] + eb[i];
            r.add_term(sum, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const BigInt& k) const {
    MultiPoly r(n_vars_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

std::string MultiPoly::to_string(std::span<const std::string> var_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string vars;
        for (int i = 0; i < n_vars_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_names.empty() ? "x" + std::to_string(i + 1) : var_names[i];
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += vars;
        }
    }
    return out;
}

nlohmann::ordered_json MultiPoly::to_json() const {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) terms.push_back({{"exp", e}, {"coef", c.get_str()}});
    return {{"vars", n_vars_}, {"terms", terms}};
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial json needs vars and terms");
    MultiPoly p(j.at("vars").get<int>());
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exp").get<Exponents>();
        const auto& cj = t.at("coef");
        BigInt c = cj.is_string() ? BigInt(cj.get<std::string>()) : BigInt(cj.get<long>());
        p.add_term(e, c);
    }
    return p;
}

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void UniPoly::add_term(std::size_t deg, const BigInt& coef) {
    if (coeffs_.size() <= deg) coeffs_.resize(deg + 1, BigInt(0));
    coeffs_[deg] += coef;
    trim();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r = *this;
    for (std::size_t d = 0; d < o.coeffs_.size(); ++d) r.add_term(d, o.coeffs_[d]);
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r;
    if (coeffs_.empty() || o.coeffs_.empty()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

nlohmann::ordered_json UniPoly::to_json() const {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const BigInt& c : coeffs_) coeffs.push_back(c.get_str());
    return {{"coeffs", coeffs}};
}

UniPoly univariate(const MultiPoly& p) {
    UniPoly r;
    for (const auto& [e, c] : p.terms()) {
        long deg = std::accumulate(e.begin(), e.end(), 0L);
        r.add_term(static_cast<std::size_t>(deg), c);
    }
    return r;
}

UniPoly burst_specialize(const MultiPoly& p, const Graph& g) {
    if (p.n_vars() != g.n_nonsink())
        throw std::invalid_argument("polynomial has one variable per non-sink vertex");
    std::vector<std::int64_t> sink_weight(g.n_nonsink());
    for (int i = 0; i < g.n_nonsink(); ++i) sink_weight[i] = g.weight(g.vertex_at(i), g.sink());
    UniPoly r;
    for (const auto& [e, c] : p.terms()) {
        std::int64_t deg = 0;
        for (int i = 0; i < p.n_vars(); ++i) deg += e[i] * sink_weight[i];
        r.add_term(static_cast<std::size_t>(deg), c);
    }
    return r;
}

MultiPoly elementary_symmetric(int n, int m) {
    if (n < 0 || m < 0 || m > n) throw std::invalid_argument("degree out of range");
    MultiPoly p(n);
    if (m == 0) return MultiPoly::constant(n, 1);
    // odometer over m-subsets of {0..n-1}
    std::vector<int> sel(m);
    for (int i = 0; i < m; ++i) sel[i] = i;
    while (true) {
        Exponents e(n, 0);
        for (int i : sel) e[i] = 1;
        p.add_term(e, 1);
        int k = m - 1;
        while (k >= 0 && sel[k] == n - m + k) --k;
        if (k < 0) break;
        ++sel[k];
        for (int i = k + 1; i < m; ++i) sel[i] = sel[i - 1] + 1;
    }
    return p;
}

MultiPoly cyclic_poly(int n, int m) {
    if (n < 1 || m < 1 || m > n) throw std::invalid_argument("degree out of range");
    MultiPoly p(n);
    if (m == n) {
        p.add_term(Exponents(n, 1), 1);
        return p;
    }
    for (int i = 0; i < n; ++i) {
        Exponents e(n, 0);
        for (int k = 0; k < m; ++k) e[(i + k) % n] = 1;
        p.add_term(e, 1);
    }
    return p;
}

std::vector<MultiPoly> support_components(const MultiPoly& p) {
    const int n = p.n_vars();
    std::vector<int> root(n);
    for (int i = 0; i < n; ++i) root[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const auto& [e, c] : p.terms()) {
        int first = -1;
        for (int i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            if (first < 0)
                first = i;
            else
                root[find(i)] = find(first);
        }
    }
    std::vector<MultiPoly> parts;
    std::map<int, std::size_t> part_of;  // component root -> index, keyed by min variable
    MultiPoly constants(n);
    for (const auto& [e, c] : p.terms()) {
        int first = -1;
        for (int i = 0; i < n && first < 0; ++i)
            if (e[i] > 0) first = i;
        if (first < 0) {
            constants.add_term(e, c);
            continue;
        }
        int r = find(first);
        auto it = part_of.find(r);
        if (it == part_of.end()) {
            it = part_of.emplace(r, parts.size()).first;
            parts.emplace_back(n);
        }
        parts[it->second].add_term(e, c);
    }
    // deterministic order: by smallest variable in the component, constants last
    std::sort(parts.begin(), parts.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return a.support().front() < b.support().front();
    });
    if (!constants.is_zero()) parts.push_back(std::move(constants));
    return parts;
}

}  // namespace avalanche
