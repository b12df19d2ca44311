#include <hypmix/acceptance/oracles.hpp>

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <stdexcept>

namespace hypmix::oracle {

Letters reduce(const Letters& raw) {
    Letters out;
    for (int l : raw) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Letters concat(const Letters& u, const Letters& v) {
    Letters raw = u;
    raw.insert(raw.end(), v.begin(), v.end());
    return reduce(raw);
}

Letters invert(const Letters& u) {
    Letters out(u.rbegin(), u.rend());
    for (int& l : out) l = -l;
    return out;
}

std::size_t tree_distance(const Letters& x, const Letters& y) { return concat(invert(x), y).size(); }

std::size_t distance_to_geodesic(const Letters& p, const Letters& x, const Letters& y) {
    const Letters step = concat(invert(x), y);
    Letters cur = x;
    std::size_t best = tree_distance(p, cur);
    for (int l : step) {
        cur = concat(cur, {l});
        best = std::min(best, tree_distance(p, cur));
    }
    return best;
}

namespace {

int rank_of(int l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }
int letter_of(int r) { return r % 2 == 0 ? r / 2 + 1 : -(r / 2 + 1); }

/// digit_table[prev][next]: position of `next` among the three letters allowed after `prev`, in rank order.
struct SuccessorTables {
    std::array<std::array<int, 4>, 4> digit{};
    std::array<std::array<int, 3>, 4> letter{};
    SuccessorTables() {
        for (int p = 0; p < 4; ++p) {
            int d = 0;
            for (int r = 0; r < 4; ++r) {
                digit[p][r] = -1;
                if (letter_of(r) == -letter_of(p)) continue;
                digit[p][r] = d;
                letter[p][d++] = letter_of(r);
            }
        }
    }
};
const SuccessorTables tables;

int successor_digit(int prev, int next) {
    const int d = tables.digit[rank_of(prev)][rank_of(next)];
    if (d < 0) throw std::logic_error("word is not reduced");
    return d;
}

int successor_letter(int prev, int digit) {
    if (digit < 0 || digit > 2) throw std::logic_error("successor digit out of range");
    return tables.letter[rank_of(prev)][digit];
}

} // namespace

BallIndex::BallIndex(int radius) : radius_(radius) {
    if (radius < 0 || radius > 30) throw std::invalid_argument("ball index radius out of range");
    pow3_.push_back(1);
    for (int i = 1; i <= radius; ++i) pow3_.push_back(pow3_.back() * 3);
    size_ = radius == 0 ? 1 : 2 * pow3_[static_cast<std::size_t>(radius)] - 1;
}

std::uint64_t BallIndex::encode(const Letters& w) const {
    if (w.empty()) return 0;
    const std::size_t len = w.size();
    std::uint64_t index = 2 * pow3_[len - 1] - 1;
    index += static_cast<std::uint64_t>(rank_of(w[0])) * pow3_[len - 1];
    for (std::size_t i = 1; i < len; ++i)
        index += static_cast<std::uint64_t>(successor_digit(w[i - 1], w[i])) * pow3_[len - 1 - i];
    return index;
}

Letters BallIndex::decode(std::uint64_t index) const {
    if (index == 0) return {};
    std::size_t len = 1;
    while (len < static_cast<std::size_t>(radius_) && index >= 2 * pow3_[len] - 1) ++len;
    std::uint64_t rest = index - (2 * pow3_[len - 1] - 1);
    Letters w{letter_of(static_cast<int>(rest / pow3_[len - 1]))};
    rest %= pow3_[len - 1];
    for (std::size_t i = 1; i < len; ++i) {
        const std::uint64_t p = pow3_[len - 1 - i];
        w.push_back(successor_letter(w.back(), static_cast<int>(rest / p)));
        rest %= p;
    }
    return w;
}

std::vector<bool> closure_members(const std::vector<Letters>& gens, int query_radius, int bound) {
    if (bound < query_radius) throw std::invalid_argument("closure bound below the query radius");
    const BallIndex ball(bound);
    std::vector<Letters> moves;
    for (const Letters& g : gens) {
        Letters r = reduce(g);
        if (r.empty()) continue;
        moves.push_back(r);
        moves.push_back(invert(r));
    }
    // Words live in fixed buffers here; this loop visits up to millions of states.
    constexpr std::size_t cap = 64;
    if (static_cast<std::size_t>(bound) > cap / 2) throw std::invalid_argument("closure bound too large");
    std::vector<std::uint64_t> offset(static_cast<std::size_t>(bound) + 2, 0), pow3(static_cast<std::size_t>(bound) + 1, 1);
    for (std::size_t i = 1; i < pow3.size(); ++i) pow3[i] = pow3[i - 1] * 3;
    for (std::size_t len = 1; len < offset.size(); ++len) offset[len] = 2 * pow3[len - 1] - 1;

    std::vector<bool> seen(ball.size());
    std::vector<std::uint32_t> queue{0};
    seen[0] = true;
    std::array<int, cap> w{};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint64_t index = queue[head];
        std::size_t len = 0;
        while (len < static_cast<std::size_t>(bound) && index >= offset[len + 1]) ++len;
        const std::uint64_t full_rest = len > 0 ? index - offset[len] : 0;
        if (len > 0) {
            std::uint64_t rest = full_rest;
            w[0] = letter_of(static_cast<int>(rest / pow3[len - 1]));
            rest %= pow3[len - 1];
            for (std::size_t i = 1; i < len; ++i) {
                const std::uint64_t p = pow3[len - 1 - i];
                w[i] = successor_letter(w[i - 1], static_cast<int>(rest / p));
                rest %= p;
            }
        }
        for (const Letters& m : moves) {
            std::size_t keep = len, j = 0;
            while (keep > 0 && j < m.size() && w[keep - 1] == -m[j]) {
                --keep;
                ++j;
            }
            const std::size_t out_len = keep + (m.size() - j);
            if (out_len > static_cast<std::size_t>(bound)) continue;
            // The digits of a prefix are the leading digits of the word.
            std::uint64_t rest = keep > 0 ? full_rest / pow3[len - keep] : 0;
            int prev = keep > 0 ? w[keep - 1] : 0;
            for (std::size_t i = j; i < m.size(); ++i) {
                rest = prev == 0 ? static_cast<std::uint64_t>(rank_of(m[i]))
                                 : rest * 3 + static_cast<std::uint64_t>(successor_digit(prev, m[i]));
                prev = m[i];
            }
            const std::uint64_t idx = out_len > 0 ? offset[out_len] + rest : 0;
            if (seen[idx]) continue;
            seen[idx] = true;
            queue.push_back(static_cast<std::uint32_t>(idx));
        }
    }
    const BallIndex query(query_radius);
    return {seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(query.size())};
}

double drift_oracle(int k, int n) {
    // Distance process: 0 -> 1 surely; otherwise +1 with prob (2k-1)/2k, -1 with prob 1/2k.
    const double up = (2.0 * k - 1.0) / (2.0 * k);
    const double down = 1.0 / (2.0 * k);
    std::vector<double> law{1.0};
    for (int step = 0; step < n; ++step) {
        std::vector<double> next(law.size() + 1, 0.0);
        next[1] += law[0];
        for (std::size_t d = 1; d < law.size(); ++d) {
            next[d + 1] += law[d] * up;
            next[d - 1] += law[d] * down;
        }
        law = std::move(next);
    }
    double mean = 0.0;
    for (std::size_t d = 0; d < law.size(); ++d) mean += static_cast<double>(d) * law[d];
    return mean / n;
}

double hitting_value_iteration(int iterations) {
    double q = 0.0;
    for (int i = 0; i < iterations; ++i) q = 0.25 + 0.75 * q * q;
    return q;
}

double hitting_within(int n) {
    // Distance to x: starts at 1, absorbed at 0; from d >= 1 it drops with prob 1/4.
    std::vector<double> law{0.0, 1.0};
    double absorbed = 0.0;
    for (int step = 0; step < n; ++step) {
        std::vector<double> next(law.size() + 1, 0.0);
        for (std::size_t d = 1; d < law.size(); ++d) {
            next[d + 1] += law[d] * 0.75;
            next[d - 1] += law[d] * 0.25;
        }
        absorbed += next[0];
        next[0] = 0.0;
        law = std::move(next);
    }
    return absorbed;
}

namespace {

/// All partial injections of {0..n-1}, -1 meaning undefined.
std::vector<std::vector<int>> partial_injections(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(map);
            return;
        }
        map[static_cast<std::size_t>(i)] = -1;
        self(self, i + 1);
        for (int t = 0; t < n; ++t) {
            if (used[static_cast<std::size_t>(t)]) continue;
            used[static_cast<std::size_t>(t)] = true;
            map[static_cast<std::size_t>(i)] = t;
            self(self, i + 1);
            used[static_cast<std::size_t>(t)] = false;
        }
        map[static_cast<std::size_t>(i)] = -1;
    };
    rec(rec, 0);
    return out;
}

} // namespace

std::vector<SubgroupAutomaton> enumerate_core_automata(int max_states) {
    const FreeContext ctx(2);
    std::set<std::string> seen;
    std::vector<SubgroupAutomaton> out;
    for (int n = 1; n <= max_states; ++n) {
        const auto maps = partial_injections(n);
        for (const auto& ma : maps)
            for (const auto& mb : maps) {
                std::vector<SubgroupAutomaton::Edge> edges;
                std::vector<int> degree(static_cast<std::size_t>(n));
                std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
                for (int s = 0; s < n; ++s)
                    for (auto [label, map] : {std::pair{1, &ma}, std::pair{2, &mb}}) {
                        int t = (*map)[static_cast<std::size_t>(s)];
                        if (t < 0) continue;
                        edges.push_back({s, label, t});
                        ++degree[static_cast<std::size_t>(s)];
                        ++degree[static_cast<std::size_t>(t)];
                        adj[static_cast<std::size_t>(s)].push_back(t);
                        adj[static_cast<std::size_t>(t)].push_back(s);
                    }
                bool core = true;
                for (int s = 1; s < n; ++s) core = core && degree[static_cast<std::size_t>(s)] >= 2;
                if (!core) continue;
                std::vector<bool> reached(static_cast<std::size_t>(n));
                std::deque<int> q{0};
                reached[0] = true;
                int count = 1;
                while (!q.empty()) {
                    int s = q.front();
                    q.pop_front();
                    for (int t : adj[static_cast<std::size_t>(s)])
                        if (!reached[static_cast<std::size_t>(t)]) {
                            reached[static_cast<std::size_t>(t)] = true;
                            ++count;
                            q.push_back(t);
                        }
                }
                if (count != n) continue;
                auto a = SubgroupAutomaton::from_graph(ctx, n, edges, 0);
                if (a.state_count() != n) throw std::logic_error("folded core graph changed size under canonicalisation");
                if (seen.insert(a.serialize()).second) out.push_back(std::move(a));
            }
    }
    return out;
}

std::optional<long long> brute_force_power_conjugacy(const SubgroupAutomaton& h, const Word& f, int max_m, int radius) {
    const auto vs = h.context().ball(radius);
    const Letters fl(f.letters().begin(), f.letters().end());
    Letters fm;
    // Free reduction of v^-1 f^m v on a reusable stack; this runs for every (graph, f, m, v).
    std::vector<int> stack;
    auto push = [&stack](int l) {
        if (!stack.empty() && stack.back() == -l)
            stack.pop_back();
        else
            stack.push_back(l);
    };
    for (int m = 1; m <= max_m; ++m) {
        fm = concat(fm, fl);
        for (const Word& v : vs) {
            stack.clear();
            for (auto it = v.letters().rbegin(); it != v.letters().rend(); ++it) push(-*it);
            for (int l : fm) push(l);
            for (int l : v.letters()) push(l);
            int state = 0;
            bool readable = true;
            for (int l : stack) {
                auto t = h.target(state, l);
                if (!t) {
                    readable = false;
                    break;
                }
                state = *t;
            }
            if (readable && state == 0) return m;
        }
    }
    return std::nullopt;
}

CompleteAutomaton random_complete_automaton(int rank, int states, SplitMix64& rng) {
    for (;;) {
        CompleteAutomaton a{states, {}};
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(states));
        for (int g = 1; g <= rank; ++g) {
            std::vector<int> perm(static_cast<std::size_t>(states));
            for (int i = 0; i < states; ++i) perm[static_cast<std::size_t>(i)] = i;
            shuffle(std::span<int>(perm), rng);
            for (int s = 0; s < states; ++s) {
                a.edges.push_back({s, g, perm[static_cast<std::size_t>(s)]});
                adj[static_cast<std::size_t>(s)].push_back(perm[static_cast<std::size_t>(s)]);
                adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])].push_back(s);
            }
        }
        std::vector<bool> reached(static_cast<std::size_t>(states));
        std::vector<int> stack{0};
        reached[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int s = stack.back();
            stack.pop_back();
            for (int t : adj[static_cast<std::size_t>(s)])
                if (!reached[static_cast<std::size_t>(t)]) {
                    reached[static_cast<std::size_t>(t)] = true;
                    ++count;
                    stack.push_back(t);
                }
        }
        if (count == states) return a;
    }
}

std::vector<Word> schreier_generators(const CompleteAutomaton& a, int rank) {
    const FreeContext ctx(rank);
    const auto n = static_cast<std::size_t>(a.states);
    std::vector<std::optional<Letters>> path(n);
    std::vector<bool> tree_edge(a.edges.size());
    path[0] = Letters{};
    std::deque<int> q{0};
    while (!q.empty()) {
        int s = q.front();
        q.pop_front();
        for (std::size_t e = 0; e < a.edges.size(); ++e) {
            const auto& edge = a.edges[e];
            int other = -1;
            int letter = 0;
            if (edge.src == s) {
                other = edge.dst;
                letter = edge.label;
            } else if (edge.dst == s) {
                other = edge.src;
                letter = -edge.label;
            }
            if (other < 0 || path[static_cast<std::size_t>(other)]) continue;
            path[static_cast<std::size_t>(other)] = concat(*path[static_cast<std::size_t>(s)], {letter});
            tree_edge[e] = true;
            q.push_back(other);
        }
    }
    std::vector<Word> gens;
    for (std::size_t e = 0; e < a.edges.size(); ++e) {
        if (tree_edge[e]) continue;
        const auto& edge = a.edges[e];
        Letters g = concat(concat(*path[static_cast<std::size_t>(edge.src)], {edge.label}),
                           invert(*path[static_cast<std::size_t>(edge.dst)]));
        gens.push_back(ctx.reduce(g));
    }
    return gens;
}

} // namespace hypmix::oracle
