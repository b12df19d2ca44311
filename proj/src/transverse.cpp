#include <hypmix/transverse.hpp>

#include <algorithm>
#include <sstream>

namespace hypmix {

namespace {

void require_nontrivial(const Word& f) {
    if (f.empty()) throw std::invalid_argument("element must be nontrivial (the identity is not loxodromic)");
}

/// Smallest m <= #states with core^m closing at `state`, or 0.
long long closing_power(const SubgroupAutomaton& h, int state, const Word& core) {
    int q = state;
    for (long long m = 1; m <= h.state_count(); ++m) {
        auto next = h.read(q, core);
        if (!next) return 0;
        q = *next;
        if (q == state) return m;
    }
    return 0;
}

std::vector<Word> powers(const Word& f, ExponentRange range) {
    std::vector<Word> out;
    out.reserve(range.size());
    for (long long m = range.low; m <= range.high; ++m) out.push_back(power(f, m));
    return out;
}

std::size_t count_close(const SubgroupAutomaton& h, const std::vector<Word>& pw, const Word& v_inv, std::size_t e) {
    std::size_t count = 0;
    for (const Word& p : pw)
        if (distance_to_orbit(h, multiply(v_inv, p)) <= e) ++count;
    return count;
}

} // namespace

std::optional<PowerConjugacy> power_conjugate_into(const SubgroupAutomaton& h, const Word& f) {
    require_nontrivial(f);
    auto [core, conj] = cyclic_reduce(f);
    std::optional<PowerConjugacy> best;
    std::vector<Word> paths;
    for (int q = 0; q < h.state_count(); ++q) {
        long long m = closing_power(h, q, core);
        if (m == 0 || (best && best->exponent <= m)) continue;
        if (paths.empty()) paths = h.state_paths();
        // core^m is a loop at q, so p core^m p^-1 in H with p the path to q,
        // and f^m = t core^m t^-1 lies in (t p^-1) H (t p^-1)^-1.
        best = PowerConjugacy{m, multiply(conj, inverse(paths[static_cast<std::size_t>(q)])), q};
    }
    return best;
}

bool is_transverse(const SubgroupAutomaton& h, const Word& f) { return !power_conjugate_into(h, f).has_value(); }

std::string TransversalityCertificate::to_text() const {
    std::ostringstream os;
    os << "verdict: " << (transverse ? "transverse" : "witness") << '\n'
       << "element: " << to_string(element) << '\n'
       << "subgroup_states: " << subgroup_states << '\n'
       << "subgroup_rank: " << subgroup_rank << '\n'
       << "pigeonhole_bound: " << pigeonhole_bound << '\n';
    if (witness) {
        os << "m: " << witness->exponent << '\n'
           << "v: " << to_string(witness->conjugator) << '\n'
           << "state: " << witness->state << '\n';
    }
    return os.str();
}

TransversalityCertificate certify_transversality(const SubgroupAutomaton& h, const Word& f) {
    TransversalityCertificate c;
    c.element = f;
    c.subgroup_states = static_cast<std::size_t>(h.state_count());
    c.subgroup_rank = h.rank();
    c.pigeonhole_bound = static_cast<std::size_t>(h.state_count());
    c.witness = power_conjugate_into(h, f);
    c.transverse = !c.witness;
    return c;
}

std::size_t overlap_count(const SubgroupAutomaton& h, const Word& f, const Word& v, std::size_t e, ExponentRange range) {
    return count_close(h, powers(f, range), inverse(v), e);
}

OverlapReport overlap_bound(const SubgroupAutomaton& h, const Word& f, std::size_t e, int radius, ExponentRange range) {
    OverlapReport r;
    r.element = f;
    r.e = e;
    r.radius = radius;
    r.range = range;
    const auto pw = powers(f, range);
    for (const Word& v : h.context().ball(radius)) {
        std::size_t c = count_close(h, pw, inverse(v), e);
        r.counts.emplace_back(v, c);
        if (c > r.max_count) {
            r.max_count = c;
            r.argmax = v;
        }
    }
    return r;
}

bool ForbiddenSet::covers(const SubgroupAutomaton& h, const Word& u) const {
    return std::any_of(representatives.begin(), representatives.end(),
                       [&](const Word& r) { return h.contains(multiply(u, inverse(r))); });
}

bool ForbiddenSet::in_double_coset(const SubgroupAutomaton& h, const Word& a) const {
    for (const Word& u : representatives)
        for (const Word& u2 : representatives)
            if (h.contains(multiply({u, a, inverse(u2)}))) return true;
    return false;
}

ForbiddenSet compute_U0(const SubgroupAutomaton& h, const Word& g) {
    require_nontrivial(g);
    auto [core, conj] = cyclic_reduce(g);
    ForbiddenSet out{{}, elementary_closure(g)};
    const auto paths = h.state_paths();
    for (int q = 0; q < h.state_count(); ++q)
        if (closing_power(h, q, core) > 0)
            out.representatives.push_back(multiply(paths[static_cast<std::size_t>(q)], inverse(conj)));
    return out;
}

AptReport apt_check(const SubgroupAutomaton& h, const Word& g, int c, AptOptions options) {
    require_nontrivial(g);
    if (c < 0) throw std::invalid_argument("apt_check needs C >= 0");
    if (c > options.max_radius)
        throw std::invalid_argument("apt_check radius C=" + std::to_string(c) + " exceeds the enumeration cap " +
                                    std::to_string(options.max_radius));
    const auto ball = h.context().ball(c);
    const auto uc = static_cast<std::size_t>(c);

    auto filtered_cosets = [&](int n, std::vector<Word>& members) {
        const Word gn = power(g, n);
        std::vector<Word> reps;
        members.clear();
        for (const Word& u : ball) {
            if (distance_to_orbit(h, multiply(u, gn)) > uc) continue;
            members.push_back(u);
            bool known = std::any_of(reps.begin(), reps.end(),
                                     [&](const Word& r) { return h.contains(multiply(u, inverse(r))); });
            if (!known) reps.push_back(u);
        }
        return reps;
    };

    AptReport report;
    std::vector<std::vector<Word>> reps_by_n;
    std::vector<std::vector<Word>> members_by_n;
    for (int n = 1; n <= options.max_exponent; ++n) {
        std::vector<Word> members;
        reps_by_n.push_back(filtered_cosets(n, members));
        members_by_n.push_back(std::move(members));
        report.coset_counts.push_back(reps_by_n.back().size());
        const int w = options.stable_window;
        if (n < w) continue;
        const std::size_t start = static_cast<std::size_t>(n - w);
        bool stable = true;
        for (std::size_t i = start; i < static_cast<std::size_t>(n) && stable; ++i) {
            stable = report.coset_counts[i] == report.coset_counts[start];
            for (const Word& u : members_by_n[i]) {
                bool inside = std::any_of(reps_by_n[start].begin(), reps_by_n[start].end(),
                                          [&](const Word& r) { return h.contains(multiply(u, inverse(r))); });
                if (!inside) stable = false;
            }
        }
        if (stable) {
            report.exponent = static_cast<int>(start) + 1;
            report.cosets = reps_by_n[start];
            report.verified = true;
            return report;
        }
    }
    report.exponent = options.max_exponent;
    report.cosets = reps_by_n.empty() ? std::vector<Word>{} : reps_by_n.back();
    return report;
}

TransverseConstruction construct_transverse(std::span<const SubgroupAutomaton> targets, const Word& g,
                                            ConstructOptions options) {
    require_nontrivial(g);
    if (targets.empty()) throw std::invalid_argument("construct_transverse needs at least one target subgroup");
    for (const auto& h : targets) {
        if (!(h.context() == targets.front().context()))
            throw std::invalid_argument("target subgroups live in different free groups");
        if (h.has_finite_index())
            throw std::invalid_argument("target subgroup has finite index " + to_string(h.index()) +
                                        "; every element has a power inside it");
    }
    const FreeContext& ctx = targets.front().context();

    std::vector<ForbiddenSet> forbidden;
    for (const auto& h : targets) forbidden.push_back(compute_U0(h, g));
    const ElementaryClosure eg = elementary_closure(g);

    std::optional<Word> shift;
    for (const Word& a : ctx.ball(options.max_shift_length)) {
        if (eg.contains(a)) continue;
        bool excluded = false;
        for (std::size_t i = 0; i < targets.size() && !excluded; ++i)
            excluded = forbidden[i].in_double_coset(targets[i], a);
        if (!excluded) {
            shift = a;
            break;
        }
    }
    if (!shift)
        throw SearchCapExceeded("no shift word of length <= " + std::to_string(options.max_shift_length) +
                                    " avoids the forbidden double cosets",
                                0);

    for (long long n = 1; n <= options.max_exponent; ++n) {
        Word f = multiply(power(g, n), *shift);
        if (f.empty()) continue;
        TransverseConstruction out{f, *shift, n, {}};
        bool all = true;
        for (const auto& h : targets) {
            out.certificates.push_back(certify_transversality(h, f));
            all = all && out.certificates.back().transverse;
        }
        if (all) return out;
    }
    throw SearchCapExceeded("no exponent n <= " + std::to_string(options.max_exponent) +
                                " makes g^n a transverse to every target",
                            options.max_exponent);
}

} // namespace hypmix
