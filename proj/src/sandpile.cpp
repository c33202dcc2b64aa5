#include "avalanche/sandpile.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace avalanche {

namespace {

void check_grains(const Graph& g, const Grains& c) {
    if (static_cast<int>(c.size()) != g.n_nonsink())
        throw std::invalid_argument("grain vector needs one entry per non-sink vertex");
    for (std::int64_t x : c)
        if (x < 0) throw std::invalid_argument("grain counts must be non-negative");
}

}  // namespace

bool is_stable(const Graph& g, const Grains& c) {
    check_grains(g, c);
    for (int i = 0; i < g.n_nonsink(); ++i)
        if (c[i] >= g.degree(g.vertex_at(i))) return false;
    return true;
}

StabilizationResult stabilize(const Graph& g, Grains c) {
    check_grains(g, c);
    const int n = g.n_nonsink();
    StabilizationResult res;
    res.topplings.assign(n, 0);

    std::deque<int> queue;
    std::vector<char> queued(n, 0);
    for (int i = 0; i < n; ++i) {
        if (c[i] >= g.degree(g.vertex_at(i))) {
            queue.push_back(i);
            queued[i] = 1;
        }
    }
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        queued[i] = 0;
        int v = g.vertex_at(i);
        std::int64_t d = g.degree(v);
        if (c[i] < d) continue;
        std::int64_t t = c[i] / d;  // batch all currently possible topples
        res.topplings[i] += t;
        c[i] -= t * d;
        for (auto [u, w] : g.neighbors(v)) {
            if (u == g.sink()) continue;
            int j = g.nonsink_index(u);
            c[j] += t * w;
            if (c[j] >= g.degree(u) && !queued[j]) {
                queue.push_back(j);
                queued[j] = 1;
            }
        }
    }
    res.avalanche_size = 0;
    res.burst = 0;
    for (int i = 0; i < n; ++i) {
        res.avalanche_size += res.topplings[i];
        res.burst += res.topplings[i] * g.weight(g.vertex_at(i), g.sink());
    }
    res.stable = std::move(c);
    return res;
}

Grains stable_add(const Graph& g, const Grains& a, const Grains& b) {
    check_grains(g, a);
    check_grains(g, b);
    Grains sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
    return stabilize(g, std::move(sum)).stable;
}

Grains max_sandpile(const Graph& g) {
    Grains c(g.n_nonsink());
    for (int i = 0; i < g.n_nonsink(); ++i) c[i] = g.degree(g.vertex_at(i)) - 1;
    return c;
}

Grains sink_firing(const Graph& g) {
    Grains u(g.n_nonsink());
    for (int i = 0; i < g.n_nonsink(); ++i) u[i] = g.weight(g.vertex_at(i), g.sink());
    return u;
}

bool is_recurrent(const Graph& g, const Grains& c) {
    if (!is_stable(g, c)) throw std::invalid_argument("recurrence is defined for stable sandpiles");
    Grains u = sink_firing(g);
    Grains sum(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) sum[i] = c[i] + u[i];
    StabilizationResult res = stabilize(g, std::move(sum));
    if (res.stable != c) return false;
    for (std::int64_t t : res.topplings)
        if (t != 1) throw std::logic_error("burning returned the sandpile without firing every vertex once");
    return true;
}

std::uint64_t stable_state_count(const Graph& g, std::uint64_t cap) {
    unsigned __int128 prod = 1;
    for (int i = 0; i < g.n_nonsink(); ++i) {
        prod *= static_cast<unsigned __int128>(g.degree(g.vertex_at(i)));
        if (prod > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(prod);
}

RecurrentEnumerator::RecurrentEnumerator(const Graph& g, std::uint64_t limit) : g_(g) {
    std::uint64_t states = stable_state_count(g, limit);
    if (states > limit) throw LimitExceeded(states, limit);
    current_.assign(g.n_nonsink(), 0);
}

std::optional<Grains> RecurrentEnumerator::next() {
    while (!done_) {
        if (started_) {
            // lexicographic odometer: last coordinate moves fastest
            int i = g_.n_nonsink() - 1;
            while (i >= 0) {
                if (++current_[i] < g_.degree(g_.vertex_at(i))) break;
                current_[i] = 0;
                --i;
            }
            if (i < 0) {
                done_ = true;
                break;
            }
        }
        started_ = true;
        if (is_recurrent(g_, current_)) return current_;
    }
    return std::nullopt;
}

std::vector<Grains> list_recurrents(const Graph& g, std::uint64_t limit) {
    RecurrentEnumerator en(g, limit);
    std::vector<Grains> out;
    while (auto c = en.next()) out.push_back(std::move(*c));
    return out;
}

std::uint64_t count_recurrents(const Graph& g, std::uint64_t limit) {
    RecurrentEnumerator en(g, limit);
    std::uint64_t n = 0;
    while (en.next()) ++n;
    return n;
}

Grains parse_grains(const std::string& text) {
    Grains out;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
            std::size_t idx = 0;
            long v = std::stol(token, &idx);
            while (idx < token.size() && std::isspace(static_cast<unsigned char>(token[idx]))) ++idx;
            if (idx != token.size()) throw std::invalid_argument("bad grain value: " + token);
            out.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    }
    // run-length shorthand: whitespace-separated tokens, each "d^k" or a
    // string of single digits ("1^3 0 1^5", "11011")
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        std::string token = text.substr(pos, end - pos);
        pos = end;
        std::size_t caret = token.find('^');
        if (caret != std::string::npos) {
            if (caret != 1 || !std::isdigit(static_cast<unsigned char>(token[0])))
                throw std::invalid_argument("bad shorthand token: " + token);
            long digit = token[0] - '0';
            long count = std::stol(token.substr(caret + 1));
            if (count < 0) throw std::invalid_argument("bad repeat count: " + token);
            out.insert(out.end(), count, digit);
        } else {
            for (char ch : token) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw std::invalid_argument("bad shorthand token: " + token);
                out.push_back(ch - '0');
            }
        }
    }
    if (out.empty() && !text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos)
        throw std::invalid_argument("could not parse sandpile: " + text);
    return out;
}

std::string grains_to_string(const Grains& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c[i]);
    }
    return out;
}

}  // namespace avalanche
