#include <hypmix/cantor.hpp>

#include <hypmix/parallel.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hypmix::cantor {

namespace {

Word from_letters(const std::vector<Letter>& letters) { return Word::reduce(letters); }

Word repeat(Letter l, std::size_t n) { return from_letters(std::vector<Letter>(n, l)); }

bool is_prefix(const Word& p, const Word& w) { return p.size() <= w.size() && common_prefix(p, w) == p.size(); }

void require_label(const Word& w, const char* what) {
    if (w.empty()) throw std::invalid_argument(std::string(what) + " must be a nonempty label");
    for (Letter l : w.letters())
        if (l == 0 || l < -3 || l > 3) throw std::invalid_argument(std::string(what) + " has a letter outside x, y, z");
}

void require_claim_label(const Word& u, const char* what) {
    require_label(u, what);
    if (u.size() < 2)
        throw std::invalid_argument(std::string(what) + " " + format_label(u) + " must have length >= 2");
    if (in_f2(u))
        throw std::invalid_argument(std::string(what) + " " + format_label(u) +
                                    " lies in F(x, y); extend it by a letter z first");
}

std::size_t successor_index(Letter prev, Letter next) {
    const auto s = successors(prev);
    auto it = std::find(s.begin(), s.end(), next);
    if (it == s.end()) throw std::logic_error("letter does not follow its predecessor in a reduced word");
    return static_cast<std::size_t>(it - s.begin());
}

std::string verdict(bool ok) { return ok ? "ok" : "FAILED"; }

} // namespace

ConeLabel parse_label(std::string_view text) {
    Word w = parse_word(text, alphabet);
    if (w.empty()) throw std::invalid_argument("cone label '" + std::string(text) + "' is empty");
    return w;
}

std::string format_label(const ConeLabel& label) { return to_string(label, alphabet); }

bool in_f2(const Word& w) {
    return std::none_of(w.letters().begin(), w.letters().end(), [](Letter l) { return l == z || l == -z; });
}

std::array<Letter, 5> successors(Letter prev) {
    std::array<Letter, 5> out{};
    std::size_t i = 0;
    for (int r = 0; r < 6; ++r) {
        Letter l = letter_from_rank(r);
        if (l != -prev) out[i++] = l;
    }
    return out;
}

std::vector<ConeLabel> order_cones(const ConeLabel& u, int n) {
    require_label(u, "cone root");
    if (n < 0) throw std::invalid_argument("order_cones needs n >= 0");
    std::vector<std::vector<Letter>> layer{u.letters()};
    for (int step = 0; step < n; ++step) {
        std::vector<std::vector<Letter>> next;
        next.reserve(layer.size() * 5);
        for (const auto& w : layer)
            for (Letter l : successors(w.back())) {
                next.push_back(w);
                next.back().push_back(l);
            }
        layer = std::move(next);
    }
    std::vector<ConeLabel> out;
    out.reserve(layer.size());
    for (const auto& w : layer) out.push_back(from_letters(w));
    return out;
}

ConeLabel xi(const ConeLabel& u, const ConeLabel& v, const ConeLabel& w) {
    require_label(u, "xi source");
    require_label(v, "xi target");
    if (!is_prefix(u, w))
        throw std::invalid_argument("xi: " + format_label(u) + " is not a prefix of " + format_label(w));
    std::vector<Letter> out = v.letters();
    Letter prev_u = u.back();
    for (std::size_t i = u.size(); i < w.size(); ++i) {
        const Letter c = w[i];
        out.push_back(successors(out.back())[successor_index(prev_u, c)]);
        prev_u = c;
    }
    return from_letters(out);
}

const std::array<Word, 18>& omega() {
    static const std::array<Word, 18> labels = [] {
        std::vector<Word> all;
        for (int r = 0; r < 6; ++r)
            for (Letter l : successors(letter_from_rank(r))) {
                Word w = from_letters({letter_from_rank(r), l});
                if (!in_f2(w)) all.push_back(w);
            }
        std::sort(all.begin(), all.end());
        std::array<Word, 18> out;
        std::copy(all.begin(), all.end(), out.begin());
        return out;
    }();
    return labels;
}

std::optional<int> omega_index(const Word& w) {
    const auto& om = omega();
    auto it = std::lower_bound(om.begin(), om.end(), w);
    if (it == om.end() || *it != w) return std::nullopt;
    return static_cast<int>(it - om.begin());
}

S18Perm::S18Perm() { std::iota(image_.begin(), image_.end(), std::uint8_t{0}); }

S18Perm::S18Perm(const std::array<std::uint8_t, 18>& image) : image_(image) {
    std::array<bool, 18> seen{};
    for (auto v : image_) {
        if (v >= 18 || seen[v]) throw std::invalid_argument("S18 image array is not a permutation of 0..17");
        seen[v] = true;
    }
}

S18Perm S18Perm::from_constraints(const std::map<Word, Word>& constraints) {
    std::array<int, 18> img;
    img.fill(-1);
    std::array<bool, 18> used{};
    for (const auto& [src, dst] : constraints) {
        auto s = omega_index(src);
        auto d = omega_index(dst);
        if (!s || !d)
            throw std::invalid_argument("permutation constraint " + format_label(src) + " -> " + format_label(dst) +
                                        " leaves the 18 z-labels");
        if (used[static_cast<std::size_t>(*d)])
            throw std::invalid_argument("permutation constraints send two labels to " + format_label(dst));
        img[static_cast<std::size_t>(*s)] = *d;
        used[static_cast<std::size_t>(*d)] = true;
    }
    std::size_t free_target = 0;
    std::array<std::uint8_t, 18> out{};
    for (std::size_t i = 0; i < 18; ++i) {
        if (img[i] < 0) {
            while (used[free_target]) ++free_target;
            used[free_target] = true;
            img[i] = static_cast<int>(free_target);
        }
        out[i] = static_cast<std::uint8_t>(img[i]);
    }
    return S18Perm(out);
}

S18Perm S18Perm::transposition(const Word& a, const Word& b) {
    auto i = omega_index(a);
    auto j = omega_index(b);
    if (!i || !j) throw std::invalid_argument("transposition of labels outside the 18 z-labels");
    S18Perm p;
    std::swap(p.image_[static_cast<std::size_t>(*i)], p.image_[static_cast<std::size_t>(*j)]);
    return p;
}

S18Perm S18Perm::random(SplitMix64& rng) {
    S18Perm p;
    shuffle(std::span<std::uint8_t>(p.image_), rng);
    return p;
}

Word S18Perm::operator()(const Word& label) const {
    auto i = omega_index(label);
    if (!i) return label;
    return omega()[image_[static_cast<std::size_t>(*i)]];
}

S18Perm S18Perm::inverse() const {
    S18Perm p;
    for (std::size_t i = 0; i < 18; ++i) p.image_[image_[i]] = static_cast<std::uint8_t>(i);
    return p;
}

S18Perm S18Perm::compose(const S18Perm& other) const {
    S18Perm p;
    for (std::size_t i = 0; i < 18; ++i) p.image_[i] = image_[other.image_[i]];
    return p;
}

bool S18Perm::is_identity() const { return *this == S18Perm(); }

std::string to_string(const S18Perm& p) {
    std::string out = "s[";
    for (std::size_t i = 0; i < 18; ++i) {
        if (i) out += ',';
        out += std::to_string(p.image()[i]);
    }
    return out + "]";
}

GElement::GElement(std::vector<GLetter> letters) : letters_(std::move(letters)) {
    for (const auto& g : letters_)
        if (auto* l = std::get_if<Letter>(&g); l && (*l == 0 || *l < -2 || *l > 2))
            throw std::invalid_argument("group letters are x, y and their inverses");
}

GElement GElement::letter(Letter l) { return GElement({GLetter(l)}); }
GElement GElement::perm(const S18Perm& p) { return GElement({GLetter(p)}); }

GElement GElement::inverse() const {
    std::vector<GLetter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        if (auto* l = std::get_if<Letter>(&*it))
            out.emplace_back(-*l);
        else
            out.emplace_back(std::get<S18Perm>(*it).inverse());
    }
    return GElement(std::move(out));
}

GElement operator*(const GElement& a, const GElement& b) {
    std::vector<GLetter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return GElement(std::move(out));
}

std::string to_string(const GElement& g) {
    if (g.letters().empty()) return "1";
    std::string out;
    for (const auto& letter : g.letters()) {
        if (!out.empty()) out += ' ';
        if (auto* l = std::get_if<Letter>(&letter))
            out += format_label(Word::letter(*l));
        else
            out += to_string(std::get<S18Perm>(letter));
    }
    return out;
}

GElement parse_gelement(std::string_view text) {
    std::vector<GLetter> letters;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "1") continue;
        if (token.rfind("s[", 0) == 0) {
            if (token.back() != ']') throw std::invalid_argument("unterminated permutation token '" + token + "'");
            std::array<std::uint8_t, 18> img{};
            std::istringstream items(token.substr(2, token.size() - 3));
            std::string item;
            std::size_t i = 0;
            while (std::getline(items, item, ',')) {
                if (i >= 18) throw std::invalid_argument("permutation token '" + token + "' has more than 18 entries");
                int v = std::stoi(item);
                if (v < 0 || v > 17) throw std::invalid_argument("permutation entry out of range in '" + token + "'");
                img[i++] = static_cast<std::uint8_t>(v);
            }
            if (i != 18) throw std::invalid_argument("permutation token '" + token + "' needs 18 entries");
            letters.emplace_back(S18Perm(img));
            continue;
        }
        Word w = parse_word(token, "xy");
        for (Letter l : w.letters()) letters.emplace_back(l);
    }
    return GElement(std::move(letters));
}

std::optional<ConeLabel> apply(const GLetter& g, const ConeLabel& label) {
    if (auto* a = std::get_if<Letter>(&g)) {
        if (label.size() == 1 && label[0] == -*a) return std::nullopt;
        return multiply(Word::letter(*a), label);
    }
    if (label.size() < 2) return std::nullopt;
    const Word head = label.prefix(2);
    if (!omega_index(head)) return label;
    return xi(head, std::get<S18Perm>(g)(head), label);
}

std::optional<ConeLabel> apply(const GElement& g, const ConeLabel& label) {
    std::optional<ConeLabel> cur = label;
    for (auto it = g.letters().rbegin(); it != g.letters().rend() && cur; ++it) cur = cantor::apply(*it, *cur);
    return cur;
}

DepthCapExceeded::DepthCapExceeded(std::size_t depth, std::size_t cap)
    : std::runtime_error("cone label of length " + std::to_string(depth) + " exceeds the depth cap " +
                         std::to_string(cap)),
      depth_(depth) {}

ConeAntichain normalize(ConeAntichain a) {
    std::set<Word> s(a.begin(), a.end());
    for (auto it = s.begin(); it != s.end();) {
        bool nested = false;
        for (std::size_t len = 1; len < it->size() && !nested; ++len) nested = s.count(it->prefix(len)) > 0;
        it = nested ? s.erase(it) : std::next(it);
    }
    for (bool changed = true; changed;) {
        changed = false;
        std::map<Word, int> children;
        for (const Word& w : s)
            if (w.size() >= 2) ++children[w.prefix(w.size() - 1)];
        for (const auto& [parent, count] : children) {
            if (count != 5) continue;
            for (Letter l : successors(parent.back())) s.erase(multiply(parent, Word::letter(l)));
            s.insert(parent);
            changed = true;
        }
    }
    return {s.begin(), s.end()};
}

ConeAntichain image_antichain(const GElement& g, const ConeAntichain& a, std::size_t depth_cap) {
    for (const Word& w : a) {
        require_label(w, "antichain label");
        if (w.size() > depth_cap) throw DepthCapExceeded(w.size(), depth_cap);
    }
    ConeAntichain cur = normalize(a);
    for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) {
        std::vector<Word> work(cur.rbegin(), cur.rend());
        ConeAntichain out;
        while (!work.empty()) {
            Word w = std::move(work.back());
            work.pop_back();
            if (auto r = cantor::apply(*it, w)) {
                if (r->size() > depth_cap) throw DepthCapExceeded(r->size(), depth_cap);
                out.push_back(std::move(*r));
                continue;
            }
            if (w.size() + 1 > depth_cap) throw DepthCapExceeded(w.size() + 1, depth_cap);
            for (const Word& child : order_cones(w, 1)) work.push_back(child);
        }
        cur = normalize(std::move(out));
    }
    return cur;
}

ConeAntichain full_partition(int depth) {
    if (depth < 1) throw std::invalid_argument("partition depth must be >= 1");
    ConeAntichain out;
    for (int r = 0; r < 6; ++r)
        for (Word& w : order_cones(Word::letter(letter_from_rank(r)), depth - 1)) out.push_back(std::move(w));
    return out;
}

bool sends_cone(const GElement& g, const ConeLabel& u, const ConeLabel& v, int extra_depth, std::size_t depth_cap) {
    if (image_antichain(g, {u}, depth_cap) != ConeAntichain{v}) return false;
    for (const Word& e : order_cones(u, extra_depth))
        if (image_antichain(g, {e}, depth_cap) != ConeAntichain{xi(u, v, e)}) return false;
    return true;
}

bool fixes_cone(const GElement& g, const ConeLabel& p, std::size_t depth_cap) {
    return image_antichain(g, {p}, depth_cap) == ConeAntichain{p};
}

GElement claim1_f(const ConeLabel& u) {
    require_claim_label(u, "claim 1 label");
    const std::size_t n = u.size();
    const Word zz = repeat(z, 2);
    const Word ZZ = repeat(-z, 2);
    if (u == repeat(-z, n)) throw std::invalid_argument("claim 1 label must differ from Z^n");
    if (n == 2) return GElement::perm(S18Perm::from_constraints({{u, zz}, {ZZ, ZZ}}));

    const Word head = u.prefix(2);
    Letter a = x;
    std::map<Word, Word> constraints;
    if (in_f2(head)) {
        a = head[0];
        constraints[ZZ] = from_letters({a, -z});
    } else if (head == ZZ) {
        constraints[ZZ] = from_letters({a, -z});
    } else {
        constraints[head] = from_letters({a, z});
        constraints[ZZ] = from_letters({a, -z});
    }
    const GElement step = GElement::letter(-a) * GElement::perm(S18Perm::from_constraints(constraints));
    auto shorter = cantor::apply(step, u);
    if (!shorter || shorter->size() != n - 1) throw std::logic_error("claim 1 reduction step did not shorten the label");
    return claim1_f(*shorter) * step;
}

GElement claim2_g(const ConeLabel& u) {
    require_claim_label(u, "claim 2 label");
    if (u == repeat(-z, u.size())) return GElement{};
    const GElement f = claim1_f(u);
    const GElement tau = GElement::perm(S18Perm::transposition(repeat(z, 2), repeat(-z, 2)));
    return f.inverse() * tau * f;
}

GElement claim3_witness(std::span<const std::pair<ConeLabel, ConeLabel>> pairs, int n) {
    if (n < 2) throw std::invalid_argument("claim 3 depth must be >= 2");
    std::set<Word> us, vs;
    for (const auto& [u, v] : pairs) {
        for (const Word* w : {&u, &v}) {
            require_claim_label(*w, "claim 3 label");
            if (w->size() != static_cast<std::size_t>(n))
                throw std::invalid_argument("claim 3 label " + format_label(*w) + " does not have length " +
                                            std::to_string(n));
        }
        if (!us.insert(u).second) throw std::invalid_argument("claim 3 source label " + format_label(u) + " repeats");
        if (!vs.insert(v).second) throw std::invalid_argument("claim 3 target label " + format_label(v) + " repeats");
    }
    const Word pivot = repeat(-z, static_cast<std::size_t>(n));
    auto swap_through_pivot = [&](const Word& c, const Word& d) {
        if (c == pivot) return claim2_g(d);
        if (d == pivot) return claim2_g(c);
        const GElement gc = claim2_g(c);
        return gc * claim2_g(d) * gc;
    };

    GElement g;
    std::vector<Word> current;
    for (const auto& p : pairs) current.push_back(p.first);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Word c = current[i];
        const Word& target = pairs[i].second;
        if (c == target) continue;
        g = swap_through_pivot(c, target) * g;
        for (Word& w : current) {
            if (w == c)
                w = target;
            else if (w == target)
                w = c;
        }
    }
    return g;
}

ClaimVerification verify_claim1(const ConeLabel& u, const GElement& f) {
    ClaimVerification v;
    const std::size_t n = u.size();
    const Word zn = repeat(-z, n);
    bool a = sends_cone(f, u, repeat(z, 2), 2);
    bool b = sends_cone(f, zn, repeat(-z, 2), 2);
    v.transcript.push_back("f[Cone(" + format_label(u) + ")] = Cone(zz) at depth " + std::to_string(n + 2) + ": " +
                           verdict(a));
    v.transcript.push_back("f[Cone(" + format_label(zn) + ")] = Cone(ZZ) at depth " + std::to_string(n + 2) + ": " +
                           verdict(b));
    v.holds = a && b;
    return v;
}

ClaimVerification verify_claim2(const ConeLabel& u, const GElement& g, std::size_t samples, std::uint64_t seed) {
    ClaimVerification v;
    const std::size_t n = u.size();
    const Word pivot = repeat(-z, n);
    bool a = sends_cone(g, u, pivot, 2);
    bool b = sends_cone(g, pivot, u, 2);
    v.transcript.push_back("g[Cone(" + format_label(u) + ")] = Cone(" + format_label(pivot) + "): " + verdict(a));
    v.transcript.push_back("g[Cone(" + format_label(pivot) + ")] = Cone(" + format_label(u) + "): " + verdict(b));

    SplitMix64 rng(seed);
    std::size_t fixed = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        Word point;
        do {
            std::vector<Letter> letters{letter_from_rank(static_cast<int>(rng.below(6)))};
            while (letters.size() < n + 3) letters.push_back(successors(letters.back())[rng.below(5)]);
            point = from_letters(letters);
        } while (point.prefix(n) == u || point.prefix(n) == pivot);
        if (fixes_cone(g, point)) ++fixed;
    }
    v.transcript.push_back("fixed sample points at depth " + std::to_string(n + 3) + ": " + std::to_string(fixed) +
                           "/" + std::to_string(samples));
    v.holds = a && b && fixed == samples;
    return v;
}

ClaimVerification verify_claim3(std::span<const std::pair<ConeLabel, ConeLabel>> pairs, const GElement& g) {
    ClaimVerification v;
    v.holds = true;
    for (const auto& [a, b] : pairs) {
        bool ok = sends_cone(g, a, b, 2);
        v.transcript.push_back("g[Cone(" + format_label(a) + ")] = Cone(" + format_label(b) + "): " + verdict(ok));
        v.holds = v.holds && ok;
    }
    return v;
}

namespace {

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    BigInt num = numerator(r), den = denominator(r);
    BigInt sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

} // namespace

HittingProbability hit_probability_exact() {
    // (3/4) q^2 - q + 1/4 = 0
    const Rational a(3, 4), b(-1), c(1, 4);
    auto root = exact_sqrt(b * b - 4 * a * c);
    if (!root) throw std::logic_error("hitting probability discriminant is not a rational square");
    Rational r1 = (-b - *root) / (2 * a);
    Rational r2 = (-b + *root) / (2 * a);
    return {std::min(r1, r2), std::max(r1, r2)};
}

ProportionEstimate estimate_hit_probability(std::size_t trials, std::size_t horizon, std::uint64_t seed, int threads) {
    if (trials == 0) throw std::invalid_argument("hitting estimate needs at least one trial");
    std::vector<unsigned char> hit(trials);
    parallel_for(trials, threads, [&](std::size_t i) {
        SplitMix64 rng(substream_seed(seed, i));
        std::vector<Letter> position;
        position.reserve(horizon);
        for (std::size_t step = 0; step < horizon; ++step) {
            const Letter l = letter_from_rank(static_cast<int>(rng.below(4)));
            if (!position.empty() && position.back() == -l)
                position.pop_back();
            else
                position.push_back(l);
            if (position.size() == 1 && position[0] == x) {
                hit[i] = 1;
                break;
            }
        }
    });
    std::size_t successes = 0;
    for (auto h : hit) successes += h;
    return estimate_proportion(successes, trials);
}

SuperharmonicReport superharmonic_check(int radius) {
    if (radius < 1) throw std::invalid_argument("superharmonic check needs radius >= 1");
    SuperharmonicReport report;
    BigInt factorial = 1;
    for (int i = 2; i <= 18; ++i) factorial *= i;
    report.support_size = factorial + 4;
    const Rational letter_mass(BigInt(1), report.support_size);
    const Rational stay = 1 - 4 * letter_mass;
    auto f = [](std::size_t len) { return Rational(BigInt(1), boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(len))); };

    const FreeContext f2(2);
    report.equality_off_origin = true;
    for (const Word& v : f2.ball(radius)) {
        Rational value = stay * f(v.size());
        for (int r = 0; r < 4; ++r) value += letter_mass * f(multiply(v, Word::letter(letter_from_rank(r))).size());
        if (v.empty())
            report.strict_at_origin = value < f(0);
        else if (value != f(v.size()))
            report.equality_off_origin = false;
        ++report.points_checked;
    }
    return report;
}

QnReport estimate_qn(const QnOptions& options) {
    if (options.p_letter < 0 || 4 * options.p_letter > 1)
        throw std::invalid_argument("p_letter must satisfy 0 <= 4 p_letter <= 1");
    if (options.n_list.empty()) throw std::invalid_argument("estimate_qn needs at least one n");
    if (options.trials == 0) throw std::invalid_argument("estimate_qn needs at least one trial");
    for (int n : options.n_list)
        if (n < 0) throw std::invalid_argument("walk lengths must be nonnegative");

    const BigInt num = numerator(options.p_letter), den = denominator(options.p_letter);
    if (den > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw std::invalid_argument("p_letter denominator exceeds 64 bits");
    const auto p = num.convert_to<std::uint64_t>();
    const auto d = den.convert_to<std::uint64_t>();
    const std::array<std::uint64_t, 5> weights{p, p, p, p, d - 4 * p};
    const DiscreteSampler sampler(weights);

    const int max_n = *std::max_element(options.n_list.begin(), options.n_list.end());
    const std::size_t k = options.n_list.size();
    const Word target = from_letters({x, x});
    std::vector<unsigned char> hits(options.trials * k);
    std::vector<unsigned char> failed(options.trials);

    parallel_for(options.trials, options.threads, [&](std::size_t i) {
        SplitMix64 rng(substream_seed(options.seed, i));
        // Tracks w_m^-1(Cone(xx)) = g_m^-1(w_{m-1}^-1(Cone(xx))).
        ConeAntichain pulled{target};
        auto record = [&](int m) {
            const bool hit = std::any_of(pulled.begin(), pulled.end(), [](const Word& w) { return w.front() == z; });
            for (std::size_t j = 0; j < k; ++j)
                if (options.n_list[j] == m) hits[i * k + j] = hit;
        };
        try {
            record(0);
            for (int m = 1; m <= max_n; ++m) {
                const std::size_t idx = sampler(rng);
                GElement step = idx < 4 ? GElement::letter(-letter_from_rank(static_cast<int>(idx)))
                                        : GElement::perm(S18Perm::random(rng).inverse());
                pulled = image_antichain(step, pulled, options.depth_cap);
                record(m);
            }
        } catch (const DepthCapExceeded&) {
            failed[i] = 1;
        }
    });

    QnReport report;
    std::size_t usable = 0;
    for (std::size_t i = 0; i < options.trials; ++i) {
        report.depth_cap_failures += failed[i];
        usable += !failed[i];
    }
    if (usable == 0) throw std::runtime_error("every q_n trial exceeded the depth cap");
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t successes = 0;
        for (std::size_t i = 0; i < options.trials; ++i)
            if (!failed[i]) successes += hits[i * k + j];
        report.estimates.push_back(make_estimate(options.n_list[j], successes, usable, options.seed,
                                                 "q_n = P(w_n(Cone(z)) meets Cone(xx))"));
    }
    return report;
}

} // namespace hypmix::cantor
