#include "core/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "core/errors.hpp"

namespace eichler {

namespace {

std::vector<int> invert_word(const std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it - 1);
    return out;
}

class WordParser {
public:
    WordParser(const std::string& s, std::size_t pos, const std::map<char, int>& idx)
        : s_(s), pos_(pos), idx_(idx) {}

    std::size_t pos() const { return pos_; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!at(c)) throw ParseError(std::string("expected '") + c + "' in word");
        ++pos_;
    }

    long long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer exponent");
        long long v = std::stoll(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    // stop characters end the word (not consumed)
    std::vector<int> parse_word(const std::string& stops) {
        std::vector<int> word;
        bool any = false;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size() || stops.find(s_[pos_]) != std::string::npos) break;
            if (s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            std::vector<int> factor = parse_factor();
            long long power = 1;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                power = parse_int();
            }
            if (power < 0) {
                factor = invert_word(factor);
                power = -power;
            }
            for (long long k = 0; k < power; ++k)
                word.insert(word.end(), factor.begin(), factor.end());
            any = true;
        }
        if (!any) throw ParseError("empty word in presentation");
        return word;
    }

private:
    std::vector<int> parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of word");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            std::vector<int> w = parse_word(")");
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            std::vector<int> u = parse_word(",]");
            expect(',');
            std::vector<int> v = parse_word("]");
            expect(']');
            std::vector<int> w = invert_word(u);
            std::vector<int> vi = invert_word(v);
            w.insert(w.end(), vi.begin(), vi.end());
            w.insert(w.end(), u.begin(), u.end());
            w.insert(w.end(), v.begin(), v.end());
            return w;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            auto it = idx_.find(lower);
            if (it == idx_.end())
                throw ParseError(std::string("unknown generator '") + c + "'");
            int g = it->second;
            return {std::isupper(static_cast<unsigned char>(c)) ? -g - 1 : g};
        }
        throw ParseError(std::string("unexpected character '") + c + "' in word");
    }

    const std::string& s_;
    std::size_t pos_;
    const std::map<char, int>& idx_;
};

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// split on a character, ignoring occurrences inside () or []
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

Presentation Presentation::parse(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos)
        throw ParseError("presentation needs a '|' between generators and relators");
    if (text.find('|', bar + 1) != std::string::npos)
        throw ParseError("presentation has more than one '|'");

    Presentation p;
    std::map<char, int> idx;
    for (const std::string& raw : split_top(text.substr(0, bar), ',')) {
        std::string name = trim(raw);
        if (name.size() != 1 || !std::islower(static_cast<unsigned char>(name[0])))
            throw ParseError("generator names must be single lowercase letters, got '" +
                             name + "'");
        char c = name[0];
        if (idx.count(c)) throw ParseError(std::string("duplicate generator '") + c + "'");
        idx[c] = static_cast<int>(p.gens.size());
        p.gens.push_back(c);
    }
    if (p.gens.empty()) throw ParseError("presentation has no generators");

    std::string rhs = trim(text.substr(bar + 1));
    if (rhs.empty()) return p; // free group: no relators

    for (const std::string& raw : split_top(rhs, ',')) {
        std::string rel = trim(raw);
        if (rel.empty()) throw ParseError("empty relator");
        std::vector<std::vector<int>> sides;
        for (const std::string& part : split_top(rel, '=')) {
            WordParser wp(part, 0, idx);
            std::vector<int> w = wp.parse_word("");
            sides.push_back(std::move(w));
        }
        if (sides.size() == 1) {
            p.relators.push_back(std::move(sides[0]));
        } else {
            for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
                std::vector<int> w = sides[i];
                std::vector<int> inv = invert_word(sides[i + 1]);
                w.insert(w.end(), inv.begin(), inv.end());
                p.relators.push_back(std::move(w));
            }
        }
    }
    return p;
}

std::string Presentation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ",";
        out += gens[i];
    }
    out += " | ";
    for (std::size_t r = 0; r < relators.size(); ++r) {
        if (r) out += ", ";
        for (int letter : relators[r])
            out += letter >= 0 ? gens[letter]
                               : static_cast<char>(std::toupper(
                                     static_cast<unsigned char>(gens[-letter - 1])));
    }
    return out;
}

Perm word_image(const std::vector<int>& word, const std::vector<Perm>& gen_images,
                unsigned degree) {
    Perm out(degree);
    for (int letter : word) {
        unsigned g = letter >= 0 ? static_cast<unsigned>(letter)
                                 : static_cast<unsigned>(-letter - 1);
        if (g >= gen_images.size()) throw ValidationError("word letter out of range");
        out = letter >= 0 ? out * gen_images[g] : out * gen_images[g].inverse();
    }
    return out;
}

bool relators_hold(const Presentation& p, const std::vector<Perm>& gen_images,
                   unsigned degree) {
    if (gen_images.size() != p.gens.size())
        throw ValidationError("image count does not match generator count");
    for (const auto& rel : p.relators)
        if (!word_image(rel, gen_images, degree).is_identity()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter coset enumeration (HLT with coincidence handling), over the
// trivial subgroup, producing the right-regular representation.
// ---------------------------------------------------------------------------

namespace {

constexpr std::int32_t UNDEF = -1;

class CosetTable {
public:
    CosetTable(unsigned ncols, std::uint64_t max_cosets)
        : ncols_(ncols), max_cosets_(max_cosets) {
        new_coset(); // coset 0: the subgroup itself
    }

    std::int32_t rep(std::int32_t c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    std::int32_t get(std::int32_t c, unsigned col) const { return tab_[c][col]; }
    void set(std::int32_t c, unsigned col, std::int32_t d) { tab_[c][col] = d; }

    std::int32_t new_coset() {
        if (live_ >= max_cosets_)
            throw EnumerationOverflow("coset enumeration exceeded the table bound of " +
                                      std::to_string(max_cosets_) + " cosets");
        tab_.emplace_back(ncols_, UNDEF);
        parent_.push_back(static_cast<std::int32_t>(tab_.size() - 1));
        ++live_;
        return static_cast<std::int32_t>(tab_.size() - 1);
    }

    std::int32_t define(std::int32_t c, unsigned col) {
        std::int32_t n = new_coset();
        tab_[c][col] = n;
        tab_[n][col ^ 1u] = c;
        return n;
    }

    bool is_live(std::int32_t c) { return rep(c) == c; }
    std::size_t total() const { return tab_.size(); }
    std::uint64_t live() const { return live_; }
    unsigned ncols() const { return ncols_; }

    void coincidence(std::int32_t a, std::int32_t b) {
        std::vector<std::int32_t> queue;
        merge(a, b, queue);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::int32_t dead = queue[qi];
            for (unsigned col = 0; col < ncols_; ++col) {
                std::int32_t f = tab_[dead][col];
                if (f == UNDEF) continue;
                tab_[dead][col] = UNDEF;
                std::int32_t fr = rep(f);
                std::int32_t sur = rep(dead);
                // transfer edge sur --col--> fr, fusing on conflicts
                std::int32_t existing = tab_[sur][col];
                if (existing != UNDEF && rep(existing) != fr) {
                    merge(rep(existing), fr, queue);
                    fr = rep(fr);
                    sur = rep(sur);
                }
                tab_[sur][col] = fr;
                std::int32_t back = tab_[fr][col ^ 1u];
                if (back == UNDEF) {
                    tab_[fr][col ^ 1u] = sur;
                } else if (rep(back) != sur) {
                    merge(rep(back), sur, queue);
                }
            }
        }
    }

private:
    void merge(std::int32_t a, std::int32_t b, std::vector<std::int32_t>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        --live_;
        queue.push_back(b);
    }

    unsigned ncols_;
    std::uint64_t max_cosets_;
    std::uint64_t live_ = 0;
    std::vector<std::vector<std::int32_t>> tab_;
    std::vector<std::int32_t> parent_;
};

// columns: generator g forward = 2g, inverse = 2g+1
unsigned letter_column(int letter) {
    return letter >= 0 ? 2u * static_cast<unsigned>(letter)
                       : 2u * static_cast<unsigned>(-letter - 1) + 1u;
}

void scan_and_fill(CosetTable& t, std::int32_t start, const std::vector<unsigned>& cols) {
    std::int32_t f = t.rep(start);
    std::int32_t b = f;
    std::size_t i = 0, j = cols.size(); // forward consumed [0,i), backward (j, end]
    while (true) {
        while (i < j) {
            std::int32_t next = t.get(f, cols[i]);
            if (next == UNDEF) break;
            f = t.rep(next);
            ++i;
        }
        if (i == j) {
            if (f != b) t.coincidence(f, b);
            return;
        }
        while (j > i) {
            std::int32_t prev = t.get(b, cols[j - 1] ^ 1u);
            if (prev == UNDEF) break;
            b = t.rep(prev);
            --j;
        }
        if (j == i) {
            if (f != b) t.coincidence(f, b);
            return;
        }
        if (j == i + 1) {
            // deduction: the single missing edge is forced
            t.set(f, cols[i], b);
            t.set(b, cols[i] ^ 1u, f);
            return;
        }
        f = t.define(f, cols[i]);
        ++i;
    }
}

} // namespace

PermGroup todd_coxeter_regular(const Presentation& p, const Config& cfg,
                               std::uint64_t declared_order) {
    unsigned ncols = 2 * p.gen_count();
    std::uint64_t cap = cfg.max_cosets;
    if (declared_order > 0)
        cap = std::min<std::uint64_t>(cfg.max_cosets,
                                      std::max<std::uint64_t>(20 * declared_order, 1000));
    CosetTable table(ncols, cap);

    std::vector<std::vector<unsigned>> rel_cols;
    for (const auto& rel : p.relators) {
        std::vector<unsigned> cols;
        cols.reserve(rel.size());
        for (int letter : rel) cols.push_back(letter_column(letter));
        rel_cols.push_back(std::move(cols));
    }

    for (std::int32_t c = 0; c < static_cast<std::int32_t>(table.total()); ++c) {
        if (!table.is_live(c)) continue;
        for (const auto& cols : rel_cols) {
            scan_and_fill(table, c, cols);
            if (!table.is_live(c)) break;
        }
        if (!table.is_live(c)) continue;
        for (unsigned col = 0; col < ncols; ++col)
            if (table.get(c, col) == UNDEF) table.define(c, col);
    }

    std::uint64_t n = table.live();
    if (n > 65535)
        throw ResourceExceeded("presented group has order " + std::to_string(n) +
                               ", beyond the permutation degree limit");
    if (declared_order > 0 && n != declared_order)
        throw ValidationError("presentation defines a group of order " +
                              std::to_string(n) + ", but order " +
                              std::to_string(declared_order) + " was declared");

    // renumber live cosets in increasing order
    std::vector<std::int32_t> label(table.total(), -1);
    std::uint64_t next = 0;
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(table.total()); ++c)
        if (table.rep(c) == c) label[c] = static_cast<std::int32_t>(next++);

    std::vector<Perm> gens;
    for (unsigned g = 0; g < p.gen_count(); ++g) {
        std::vector<Point> img(n);
        for (std::int32_t c = 0; c < static_cast<std::int32_t>(table.total()); ++c) {
            if (table.rep(c) != c) continue;
            std::int32_t d = table.get(c, 2 * g);
            if (d == UNDEF) throw InternalError("coset table left an entry undefined");
            img[label[c]] = static_cast<Point>(label[table.rep(d)]);
        }
        gens.emplace_back(std::move(img));
    }
    PermGroup result(static_cast<unsigned>(n), std::move(gens), cfg);
    if (result.order() != n)
        throw InternalError("regular representation order mismatch");
    if (!relators_hold(p, result.generators(), result.degree()))
        throw InternalError("coset table violates a relator");
    return result;
}

} // namespace eichler
