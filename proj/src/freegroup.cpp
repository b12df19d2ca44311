#include <hypmix/freegroup.hpp>

#include <hypmix/constants.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hypmix {

Word Word::reduce(std::span<const Letter> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(std::move(out));
}

Word Word::prefix(std::size_t n) const {
    n = std::min(n, letters_.size());
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::suffix_from(std::size_t i) const {
    i = std::min(i, letters_.size());
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(i), letters_.end()));
}

Word Word::subword(std::size_t begin, std::size_t end) const {
    end = std::min(end, letters_.size());
    begin = std::min(begin, end);
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
    if (auto c = u.size() <=> v.size(); c != 0) return c;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (auto c = letter_rank(u[i]) <=> letter_rank(v[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Letter l : w.letters()) {
        h ^= static_cast<std::size_t>(letter_rank(l) + 1);
        h *= 0x100000001b3ULL;
    }
    return h;
}

FreeContext::FreeContext(int rank) : rank_(rank) {
    if (rank < 2) throw std::invalid_argument("free group rank must be >= 2, got " + std::to_string(rank));
    if (rank > 26) throw std::invalid_argument("free group rank must be <= 26, got " + std::to_string(rank));
}

Word FreeContext::reduce(std::span<const Letter> raw) const {
    for (Letter l : raw)
        if (!valid(l))
            throw std::invalid_argument("generator index " + std::to_string(l) + " outside 1.." +
                                        std::to_string(rank_));
    return Word::reduce(raw);
}

namespace {

std::string default_alphabet(int rank) {
    std::string s;
    for (int i = 0; i < rank; ++i) s.push_back(static_cast<char>('a' + i));
    return s;
}

} // namespace

Word parse_word(std::string_view text, std::string_view alphabet) {
    std::vector<Letter> raw;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '1') continue;
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        auto pos = alphabet.find(lower);
        if (pos == std::string_view::npos || !std::isalpha(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("invalid letter '" + std::string(1, ch) + "' in word '" +
                                        std::string(text) + "'");
        Letter l = static_cast<Letter>(pos) + 1;
        raw.push_back(std::isupper(static_cast<unsigned char>(ch)) ? -l : l);
    }
    return Word::reduce(raw);
}

Word FreeContext::parse(std::string_view text) const { return parse_word(text, default_alphabet(rank_)); }

std::vector<Word> FreeContext::parse_list(std::string_view comma_separated) const {
    std::vector<Word> out;
    std::size_t start = 0;
    while (start <= comma_separated.size()) {
        auto end = comma_separated.find(',', start);
        if (end == std::string_view::npos) end = comma_separated.size();
        auto item = comma_separated.substr(start, end - start);
        bool blank = std::all_of(item.begin(), item.end(),
                                 [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (!blank) out.push_back(parse(item));
        start = end + 1;
    }
    return out;
}

std::vector<Word> FreeContext::sphere(int radius) const {
    std::vector<Word> layer{Word{}};
    for (int len = 1; len <= radius; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer) {
            for (int r = 0; r < alphabet_size(); ++r) {
                Letter l = letter_from_rank(r);
                if (!w.empty() && w.back() == -l) continue;
                std::vector<Letter> letters = w.letters();
                letters.push_back(l);
                next.push_back(Word::reduce(letters));
            }
        }
        layer = std::move(next);
    }
    return layer;
}

std::vector<Word> FreeContext::ball(int radius) const {
    std::vector<Word> out;
    for (int len = 0; len <= radius; ++len) {
        auto s = sphere(len);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

std::string to_string(const Word& w, std::string_view alphabet) {
    if (w.empty()) return "1";
    std::string s;
    s.reserve(w.size());
    for (Letter l : w.letters()) {
        char c = alphabet[static_cast<std::size_t>((l < 0 ? -l : l) - 1)];
        s.push_back(l < 0 ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
    }
    return s;
}

std::string to_string(const Word& w) { return to_string(w, "abcdefghijklmnopqrstuvwxyz"); }

Word multiply(const Word& u, const Word& v) {
    std::size_t cancel = 0;
    while (cancel < u.size() && cancel < v.size() && u[u.size() - 1 - cancel] == -v[cancel]) ++cancel;
    std::vector<Letter> out;
    out.reserve(u.size() + v.size() - 2 * cancel);
    out.insert(out.end(), u.letters().begin(), u.letters().end() - static_cast<std::ptrdiff_t>(cancel));
    out.insert(out.end(), v.letters().begin() + static_cast<std::ptrdiff_t>(cancel), v.letters().end());
    return Word::reduce(out);
}

Word multiply(std::initializer_list<Word> factors) {
    Word acc;
    for (const Word& f : factors) acc = multiply(acc, f);
    return acc;
}

Word inverse(const Word& u) {
    std::vector<Letter> out(u.letters().rbegin(), u.letters().rend());
    for (Letter& l : out) l = -l;
    return Word::reduce(out);
}

Word power(const Word& u, long long m) {
    if (m == 0 || u.empty()) return Word{};
    Word base = m > 0 ? u : inverse(u);
    long long e = m > 0 ? m : -m;
    auto [core, conj] = cyclic_reduce(base);
    std::vector<Letter> letters;
    letters.reserve(core.size() * static_cast<std::size_t>(e));
    for (long long i = 0; i < e; ++i) letters.insert(letters.end(), core.letters().begin(), core.letters().end());
    return multiply({conj, Word::reduce(letters), inverse(conj)});
}

Word conjugate_by(const Word& w, const Word& g) { return multiply({g, w, inverse(g)}); }

std::size_t distance(const Word& u, const Word& v) {
    std::size_t p = common_prefix(u, v);
    return (u.size() - p) + (v.size() - p);
}

std::size_t common_prefix(const Word& u, const Word& v) {
    std::size_t p = 0;
    while (p < u.size() && p < v.size() && u[p] == v[p]) ++p;
    return p;
}

CyclicDecomposition cyclic_reduce(const Word& w) {
    std::size_t k = 0;
    while (2 * k + 1 < w.size() && w[k] == -w[w.size() - 1 - k]) ++k;
    return {w.subword(k, w.size() - k), w.prefix(k)};
}

bool is_cyclically_reduced(const Word& w) { return w.size() < 2 || w.front() != -w.back(); }

WordRoot root(const Word& w) {
    if (w.empty()) throw std::invalid_argument("root of the identity is undefined");
    auto [core, conj] = cyclic_reduce(w);
    const std::size_t n = core.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) periodic = core[i] == core[i - p];
        if (periodic) {
            Word r = multiply({conj, core.prefix(p), inverse(conj)});
            return {r, static_cast<long long>(n / p)};
        }
    }
    return {w, 1}; // unreachable: p = n always succeeds
}

ElementaryClosure elementary_closure(const Word& g) {
    if (g.empty()) throw std::invalid_argument("elementary closure of the identity is undefined");
    auto [core, conj] = cyclic_reduce(g);
    auto [r, m] = root(core);
    return {r, conj};
}

bool ElementaryClosure::contains(const Word& x) const {
    Word y = multiply({inverse(conjugator), x, conjugator});
    if (y.empty()) return true;
    if (y.size() % primitive.size() != 0) return false;
    long long j = static_cast<long long>(y.size() / primitive.size());
    return y == power(primitive, j) || y == power(primitive, -j);
}

std::string to_string(HalfInteger h) {
    if (h.is_integer()) return std::to_string(h.twice() / 2);
    return std::to_string(h.twice()) + "/2";
}

HalfInteger gromov_product(const Word& x, const Word& y, const Word& s) {
    auto twice = static_cast<long long>(distance(x, s)) + static_cast<long long>(distance(y, s)) -
                 static_cast<long long>(distance(x, y));
    return HalfInteger::from_twice(twice);
}

std::vector<Word> geodesic(const Word& x, const Word& y) {
    Word step = multiply(inverse(x), y);
    std::vector<Word> out;
    out.reserve(step.size() + 1);
    for (std::size_t i = 0; i <= step.size(); ++i) out.push_back(multiply(x, step.prefix(i)));
    return out;
}

std::size_t distance_to_geodesic(const Word& p, const Word& x, const Word& y) {
    std::size_t best = distance(p, x);
    for (const Word& v : geodesic(x, y)) best = std::min(best, distance(p, v));
    return best;
}

std::size_t TreePath::length() const {
    std::size_t total = 0;
    for (const Word& l : labels) total += l.size();
    return total;
}

TreePath labeled_path(std::span<const Word> labels, const Word& base) {
    TreePath p;
    p.vertices.push_back(base);
    for (const Word& l : labels) {
        if (l.empty()) throw std::invalid_argument("labeled path with an empty (trivial) label");
        p.labels.push_back(l);
        p.vertices.push_back(multiply(p.vertices.back(), l));
    }
    return p;
}

namespace {

void require_lambda(const Rational& lambda) {
    if (lambda < 1) throw std::invalid_argument("quasi-geodesic lambda must be >= 1, got " + lambda.str());
}

} // namespace

Rational minimal_c(const TreePath& p, const Rational& lambda) {
    require_lambda(lambda);
    if (p.labels.empty()) throw std::invalid_argument("path must have at least one segment");
    Rational worst = 0;
    const std::size_t m = p.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t len = 0;
        for (std::size_t j = i + 1; j < m; ++j) {
            len += p.labels[j - 1].size();
            Rational slack = Rational(static_cast<long long>(len)) -
                             lambda * Rational(static_cast<long long>(distance(p.vertices[i], p.vertices[j])));
            if (slack > worst) worst = slack;
        }
    }
    return worst;
}

bool is_quasi_geodesic(const TreePath& p, const Rational& lambda, const Rational& c) {
    return minimal_c(p, lambda) <= c;
}

BrokenGeodesicVerdict broken_geodesic_check(std::span<const Word> points, const Rational& c0,
                                            const Rational& c1) {
    if (points.size() < 2) throw std::invalid_argument("broken geodesic needs at least two points");
    if (c0 < constants::broken_geodesic_c0_factor * constants::delta)
        throw std::invalid_argument("C0 must be >= 168 delta = 0");
    if (!(c1 > constants::broken_geodesic_c1_factor * (c0 + 12 * constants::delta)))
        throw std::invalid_argument("C1 must exceed 12 (C0 + 12 delta)");

    BrokenGeodesicVerdict v;
    v.hypothesis_holds = true;
    for (std::size_t i = 1; i < points.size(); ++i)
        if (Rational(static_cast<long long>(distance(points[i - 1], points[i]))) < c1) v.hypothesis_holds = false;
    for (std::size_t i = 1; i + 1 < points.size(); ++i)
        if (gromov_product(points[i - 1], points[i + 1], points[i]).to_rational() > c0) v.hypothesis_holds = false;

    v.conclusion_holds = true;
    const Word& first = points.front();
    const Word& last = points.back();
    for (const Word& x : points)
        if (Rational(static_cast<long long>(distance_to_geodesic(x, first, last))) > 2 * c0)
            v.conclusion_holds = false;
    return v;
}

} // namespace hypmix
