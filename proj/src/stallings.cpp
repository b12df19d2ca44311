#include <hypmix/stallings.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hypmix {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

long long edge_key(int vertex, Letter l) { return static_cast<long long>(vertex) * 64 + letter_rank(l); }

} // namespace

SubgroupAutomaton::SubgroupAutomaton(const FreeContext& ctx)
    : ctx_(ctx), states_(1), trans_(static_cast<std::size_t>(ctx.alphabet_size()), -1) {}

SubgroupAutomaton SubgroupAutomaton::from_generators(const FreeContext& ctx, std::span<const Word> gens) {
    std::vector<Edge> edges;
    int vertices = 1;
    for (const Word& g : gens) {
        for (Letter l : g.letters())
            if (!ctx.valid(l)) throw std::invalid_argument("generator letter outside the context rank");
        if (g.empty()) continue;
        // petal: base -> v1 -> ... -> base
        int prev = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            int next = (i + 1 == g.size()) ? 0 : vertices++;
            Letter l = g[i];
            if (l > 0)
                edges.push_back({prev, l, next});
            else
                edges.push_back({next, -l, prev});
            prev = next;
        }
    }
    return from_graph(ctx, vertices, edges, 0);
}

SubgroupAutomaton SubgroupAutomaton::from_graph(const FreeContext& ctx, int vertex_count, std::span<const Edge> raw,
                                                int base) {
    if (base < 0 || base >= vertex_count) throw std::invalid_argument("base vertex out of range");
    for (const Edge& e : raw) {
        if (e.label <= 0 || !ctx.valid(e.label)) throw std::invalid_argument("edge label outside the context rank");
        if (e.src < 0 || e.src >= vertex_count || e.dst < 0 || e.dst >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
    }

    // Fold until no vertex has two edges with the same label in the same direction.
    DisjointSets sets(vertex_count);
    for (bool changed = true; changed;) {
        changed = false;
        std::unordered_map<long long, int> out, in;
        for (const Edge& e : raw) {
            int s = sets.find(e.src);
            int d = sets.find(e.dst);
            auto [it_out, fresh_out] = out.try_emplace(edge_key(s, e.label), d);
            if (!fresh_out && sets.find(it_out->second) != d) changed |= sets.unite(it_out->second, d);
            d = sets.find(e.dst);
            s = sets.find(e.src);
            auto [it_in, fresh_in] = in.try_emplace(edge_key(d, e.label), s);
            if (!fresh_in && sets.find(it_in->second) != s) changed |= sets.unite(it_in->second, s);
        }
    }

    // Deduplicated folded edge set on representatives.
    std::vector<Edge> folded;
    {
        std::unordered_map<long long, int> seen;
        for (const Edge& e : raw) {
            int s = sets.find(e.src);
            int d = sets.find(e.dst);
            if (seen.try_emplace(edge_key(s, e.label), d).second) folded.push_back({s, e.label, d});
        }
    }
    const int root = sets.find(base);

    // Prune hanging trees: non-base vertices of degree <= 1.
    std::vector<int> degree(static_cast<std::size_t>(vertex_count), 0);
    std::vector<bool> alive_edge(folded.size(), true);
    std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(vertex_count));
    for (std::size_t i = 0; i < folded.size(); ++i) {
        ++degree[static_cast<std::size_t>(folded[i].src)];
        ++degree[static_cast<std::size_t>(folded[i].dst)];
        incident[static_cast<std::size_t>(folded[i].src)].push_back(i);
        if (folded[i].dst != folded[i].src) incident[static_cast<std::size_t>(folded[i].dst)].push_back(i);
    }
    std::deque<int> queue;
    for (int v = 0; v < vertex_count; ++v)
        if (sets.find(v) == v && v != root && degree[static_cast<std::size_t>(v)] <= 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (std::size_t i : incident[static_cast<std::size_t>(v)]) {
            if (!alive_edge[i]) continue;
            alive_edge[i] = false;
            int other = folded[i].src == v ? folded[i].dst : folded[i].src;
            --degree[static_cast<std::size_t>(v)];
            --degree[static_cast<std::size_t>(other)];
            if (other != root && degree[static_cast<std::size_t>(other)] == 1) queue.push_back(other);
        }
    }

    // Canonical breadth-first renumbering from the base.
    const int k2 = ctx.alphabet_size();
    std::unordered_map<long long, int> step;
    for (std::size_t i = 0; i < folded.size(); ++i) {
        if (!alive_edge[i]) continue;
        step[edge_key(folded[i].src, folded[i].label)] = folded[i].dst;
        step[edge_key(folded[i].dst, -folded[i].label)] = folded[i].src;
    }
    std::unordered_map<int, int> number;
    std::vector<int> order{root};
    number[root] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int r = 0; r < k2; ++r) {
            auto it = step.find(edge_key(v, letter_from_rank(r)));
            if (it == step.end()) continue;
            if (number.try_emplace(it->second, static_cast<int>(order.size())).second) order.push_back(it->second);
        }
    }

    SubgroupAutomaton a(ctx);
    a.states_ = static_cast<int>(order.size());
    a.trans_.assign(static_cast<std::size_t>(a.states_) * static_cast<std::size_t>(k2), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int r = 0; r < k2; ++r) {
            auto it = step.find(edge_key(order[i], letter_from_rank(r)));
            if (it == step.end()) continue;
            a.trans_[i * static_cast<std::size_t>(k2) + static_cast<std::size_t>(r)] = number.at(it->second);
        }
    }
    return a;
}

std::optional<int> SubgroupAutomaton::read(int from, const Word& w) const {
    int state = from;
    for (Letter l : w.letters()) {
        if (!ctx_.valid(l)) return std::nullopt;
        state = trans_[index_of(state, l)];
        if (state < 0) return std::nullopt;
    }
    return state;
}

bool SubgroupAutomaton::contains(const Word& w) const {
    auto end = read(base(), w);
    return end && *end == base();
}

std::vector<SubgroupAutomaton::Edge> SubgroupAutomaton::edges() const {
    std::vector<Edge> out;
    for (int s = 0; s < states_; ++s)
        for (Letter l = 1; l <= ctx_.rank(); ++l)
            if (auto t = target(s, l)) out.push_back({s, l, *t});
    return out;
}

std::size_t SubgroupAutomaton::edge_count() const { return edges().size(); }

int SubgroupAutomaton::degree(int state) const {
    int d = 0;
    for (int r = 0; r < ctx_.alphabet_size(); ++r)
        if (trans_[index_of(state, letter_from_rank(r))] >= 0) ++d;
    return d;
}

std::size_t SubgroupAutomaton::rank() const { return edge_count() + 1 - static_cast<std::size_t>(states_); }

std::optional<std::size_t> SubgroupAutomaton::index() const {
    if (std::find(trans_.begin(), trans_.end(), -1) != trans_.end()) return std::nullopt;
    return static_cast<std::size_t>(states_);
}

std::vector<Word> SubgroupAutomaton::state_paths() const {
    std::vector<std::optional<Word>> path(static_cast<std::size_t>(states_));
    path[0] = Word{};
    std::vector<int> order{0};
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int r = 0; r < ctx_.alphabet_size(); ++r) {
            Letter l = letter_from_rank(r);
            auto t = target(v, l);
            if (!t || path[static_cast<std::size_t>(*t)]) continue;
            path[static_cast<std::size_t>(*t)] = multiply(*path[static_cast<std::size_t>(v)], Word::letter(l));
            order.push_back(*t);
        }
    }
    std::vector<Word> out;
    out.reserve(path.size());
    for (auto& p : path) out.push_back(p.value_or(Word{}));
    return out;
}

std::vector<int> SubgroupAutomaton::distances_to_base() const {
    std::vector<int> dist(static_cast<std::size_t>(states_), -1);
    dist[0] = 0;
    std::vector<int> order{0};
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int r = 0; r < ctx_.alphabet_size(); ++r) {
            auto t = target(v, letter_from_rank(r));
            if (!t || dist[static_cast<std::size_t>(*t)] >= 0) continue;
            dist[static_cast<std::size_t>(*t)] = dist[static_cast<std::size_t>(v)] + 1;
            order.push_back(*t);
        }
    }
    return dist;
}

std::vector<Word> SubgroupAutomaton::generators() const {
    auto paths = state_paths();
    std::vector<Word> out;
    for (const Edge& e : edges()) {
        const Word& ps = paths[static_cast<std::size_t>(e.src)];
        const Word& pd = paths[static_cast<std::size_t>(e.dst)];
        Word via = multiply(ps, Word::letter(e.label));
        if (via == pd) continue; // tree edge
        out.push_back(multiply(via, inverse(pd)));
    }
    return out;
}

std::string SubgroupAutomaton::serialize() const {
    std::ostringstream os;
    os << states_ << '\n' << "base=0\n";
    for (const Edge& e : edges()) os << e.src << ' ' << to_string(Word::letter(e.label)) << ' ' << e.dst << '\n';
    return os.str();
}

SubgroupAutomaton SubgroupAutomaton::parse(const FreeContext& ctx, std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    int count = -1;
    int base_state = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        auto fail = [&](const std::string& what) {
            return std::invalid_argument("automaton line " + std::to_string(line_no) + ": " + what);
        };
        if (count < 0) {
            try {
                count = std::stoi(first);
            } catch (const std::exception&) {
                throw fail("expected state count");
            }
            if (count < 1) throw fail("state count must be positive");
            continue;
        }
        if (first.rfind("base=", 0) == 0) {
            base_state = std::stoi(first.substr(5));
            continue;
        }
        std::string label;
        int dst = 0;
        int src = 0;
        try {
            src = std::stoi(first);
        } catch (const std::exception&) {
            throw fail("expected 'src label dst'");
        }
        if (!(ls >> label >> dst)) throw fail("expected 'src label dst'");
        Word l = ctx.parse(label);
        if (l.size() != 1) throw fail("edge label must be a single letter");
        if (l[0] > 0)
            edges.push_back({src, l[0], dst});
        else
            edges.push_back({dst, -l[0], src});
    }
    if (count < 0) throw std::invalid_argument("automaton text is empty");
    if (base_state < 0) base_state = 0;
    return from_graph(ctx, count, edges, base_state);
}

namespace {

void require_same_context(const SubgroupAutomaton& a, const SubgroupAutomaton& b) {
    if (!(a.context() == b.context())) throw std::invalid_argument("automata live in different free groups");
}

} // namespace

SubgroupAutomaton conjugate(const SubgroupAutomaton& a, const Word& g) {
    if (g.empty()) return a;
    std::vector<SubgroupAutomaton::Edge> edges = a.edges();
    // fresh vertices a.states .. a.states + |g| - 1; the new base is the first one
    const int first = a.state_count();
    int prev = first;
    int vertices = first + 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
        int next = (i + 1 == g.size()) ? SubgroupAutomaton::base() : vertices++;
        Letter l = g[i];
        if (l > 0)
            edges.push_back({prev, l, next});
        else
            edges.push_back({next, -l, prev});
        prev = next;
    }
    return SubgroupAutomaton::from_graph(a.context(), vertices, edges, first);
}

SubgroupAutomaton intersect(const SubgroupAutomaton& a, const SubgroupAutomaton& b) {
    require_same_context(a, b);
    std::unordered_map<long long, int> number;
    std::vector<std::pair<int, int>> order{{0, 0}};
    number[0] = 0;
    std::vector<SubgroupAutomaton::Edge> edges;
    auto key = [&](int p, int q) { return static_cast<long long>(p) * b.state_count() + q; };
    for (std::size_t head = 0; head < order.size(); ++head) {
        auto [p, q] = order[head];
        for (int r = 0; r < a.context().alphabet_size(); ++r) {
            Letter l = letter_from_rank(r);
            auto tp = a.target(p, l);
            auto tq = b.target(q, l);
            if (!tp || !tq) continue;
            auto [it, fresh] = number.try_emplace(key(*tp, *tq), static_cast<int>(order.size()));
            if (fresh) order.emplace_back(*tp, *tq);
            if (l > 0) edges.push_back({static_cast<int>(head), l, it->second});
        }
    }
    return SubgroupAutomaton::from_graph(a.context(), static_cast<int>(order.size()), edges, 0);
}

SubgroupAutomaton join(const SubgroupAutomaton& a, const SubgroupAutomaton& b) {
    require_same_context(a, b);
    std::vector<SubgroupAutomaton::Edge> edges = a.edges();
    const int offset = a.state_count() - 1; // b's base is identified with a's base
    auto remap = [&](int v) { return v == 0 ? 0 : v + offset; };
    for (const auto& e : b.edges()) edges.push_back({remap(e.src), e.label, remap(e.dst)});
    return SubgroupAutomaton::from_graph(a.context(), a.state_count() + b.state_count() - 1, edges, 0);
}

SubgroupAutomaton join(const SubgroupAutomaton& a, std::span<const Word> extra) {
    return join(a, SubgroupAutomaton::from_generators(a.context(), extra));
}

std::size_t distance_to_orbit(const SubgroupAutomaton& a, const Word& w) {
    // The geodesic from w to the nearest orbit point leaves [1, w] at some prefix
    // w[:j] and then follows a shortest path of the core graph back to the base.
    const auto dist = a.distances_to_base();
    std::size_t best = w.size(); // h = 1
    int state = SubgroupAutomaton::base();
    for (std::size_t j = 0; j <= w.size(); ++j) {
        best = std::min(best, (w.size() - j) + static_cast<std::size_t>(dist[static_cast<std::size_t>(state)]));
        if (j == w.size()) break;
        auto next = a.target(state, w[j]);
        if (!next) break;
        state = *next;
    }
    return best;
}

Trace trace(const SubgroupAutomaton& a, std::span<const Word> window) {
    Trace t;
    t.window.assign(window.begin(), window.end());
    std::sort(t.window.begin(), t.window.end());
    t.window.erase(std::unique(t.window.begin(), t.window.end()), t.window.end());
    for (const Word& f : t.window)
        if (a.contains(f)) t.hits.push_back(f);
    return t;
}

bool certify_free_product(const SubgroupAutomaton& a, const Word& g) {
    if (g.empty()) throw std::invalid_argument("free product certificate needs a nontrivial element");
    const Word gens[] = {g};
    return join(a, gens).rank() == a.rank() + 1;
}

std::string to_string(std::optional<std::size_t> index) { return index ? std::to_string(*index) : "inf"; }

} // namespace hypmix
