#include "core/zoo.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include "core/builtin_data.hpp"
#include "core/errors.hpp"

namespace eichler {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t k = s.find(sep, pos);
        if (k == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, k - pos));
        pos = k + sep.size();
    }
    return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& where) {
    const std::string t = trim(s);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw ParseError(where + ": expected a non-negative integer, got '" + t + "'");
    try {
        return std::stoull(t);
    } catch (const std::exception&) {
        throw ParseError(where + ": integer out of range: '" + t + "'");
    }
}

// Split a product expression on top-level '*' or ' x ' separators.
// Bracket pairs (), [] and <> protect their contents.
std::vector<std::string> split_product_terms(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '[' || c == '<') ++depth;
        else if (c == ')' || c == ']' || c == '>') --depth;
        if (depth == 0) {
            if (c == '*') {
                parts.push_back(cur);
                cur.clear();
                continue;
            }
            if (c == 'x' && i > 0 && i + 1 < text.size() && text[i - 1] == ' ' &&
                text[i + 1] == ' ') {
                parts.push_back(cur);
                cur.clear();
                ++i; // skip the space after 'x'
                continue;
            }
        }
        cur += c;
    }
    parts.push_back(cur);
    return parts;
}

struct PolyhedralDef {
    const char* name;
    const char* pres;
    std::uint64_t order;
};

const PolyhedralDef kPolyhedral[] = {
    {"BT", "a,b | a^3=b^3=(a*b)^2", 24},
    {"BO", "a,b | a^3=b^4=(a*b)^2", 48},
    {"BI", "a,b | a^5=b^3=(a*b)^2", 120},
};

const PolyhedralDef* polyhedral_def(const std::string& name) {
    for (const auto& d : kPolyhedral)
        if (name == d.name) return &d;
    return nullptr;
}

GroupPtr wrap_atom(PermGroup pg, std::string spec, std::optional<Presentation> pres,
                   std::string provenance) {
    auto g = std::make_shared<Group>();
    g->spec = std::move(spec);
    g->provenance = std::move(provenance);
    g->perm = std::move(pg);
    g->pres = std::move(pres);
    return g;
}

// Merge factor presentations into one for the direct product: generators are
// relabelled a, b, c, ... in factor order, factor relators are kept, and
// cross-factor commutators are added.  Unavailable when any factor lacks a
// presentation or more than 26 letters would be needed.
std::optional<Presentation> compose_presentations(
    const std::vector<GroupPtr>& factors) {
    std::size_t total = 0;
    for (const auto& f : factors) {
        if (!f->pres) return std::nullopt;
        total += f->pres->gens.size();
    }
    if (total > 26) return std::nullopt;

    Presentation p;
    for (std::size_t i = 0; i < total; ++i)
        p.gens.push_back(static_cast<char>('a' + i));

    int off = 0;
    std::vector<std::pair<int, int>> spans; // [first, last) generator index per factor
    for (const auto& f : factors) {
        int n = static_cast<int>(f->pres->gens.size());
        spans.emplace_back(off, off + n);
        for (const auto& rel : f->pres->relators) {
            std::vector<int> w;
            w.reserve(rel.size());
            for (int v : rel)
                w.push_back(v >= 0 ? v + off : -((-v - 1) + off) - 1);
            p.relators.push_back(std::move(w));
        }
        off += n;
    }
    for (std::size_t i = 0; i + 1 < spans.size(); ++i)
        for (std::size_t j = i + 1; j < spans.size(); ++j)
            for (int gi = spans[i].first; gi < spans[i].second; ++gi)
                for (int gj = spans[j].first; gj < spans[j].second; ++gj)
                    p.relators.push_back({-gi - 1, -gj - 1, gi, gj});
    return p;
}

GroupPtr make_product(std::vector<GroupPtr> factors, const Config& cfg) {
    std::uint64_t order = 1;
    unsigned long long degree = 0;
    for (const auto& f : factors) {
        degree += f->degree();
        if (f->order() != 0 && order > cfg.max_composed_order / f->order())
            throw ResourceExceeded("direct product order exceeds the composed-order cap");
        order *= f->order();
    }
    if (order > cfg.max_composed_order)
        throw ResourceExceeded("direct product order exceeds the composed-order cap");
    if (degree > 65535)
        throw ResourceExceeded("direct product degree exceeds the permutation point limit");

    std::vector<PermGroup> perms;
    perms.reserve(factors.size());
    for (const auto& f : factors) perms.push_back(f->perm);

    auto g = std::make_shared<Group>();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) g->spec += " x ";
        g->spec += factors[i]->spec;
    }
    g->provenance = "product";
    PermGroup prod = direct_product(perms);
    g->perm = PermGroup(prod.degree(), prod.generators(), cfg);
    g->factors = std::move(factors);
    g->pres = compose_presentations(g->factors);
    return g;
}

} // namespace

// ---------------------------------------------------------------------------
// Group
// ---------------------------------------------------------------------------

std::shared_ptr<const ConjugacyClasses> Group::classes() const {
    if (classes_cache_) return classes_cache_;
    if (factors.empty()) {
        classes_cache_ = ConjugacyClasses::raw(perm);
    } else {
        std::vector<std::shared_ptr<const ConjugacyClasses>> fc;
        fc.reserve(factors.size());
        for (const auto& f : factors) fc.push_back(f->classes());
        classes_cache_ = ConjugacyClasses::product(std::move(fc));
    }
    return classes_cache_;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

PermGroup cyclic_group(unsigned n, const Config& cfg) {
    if (n == 0) throw ParseError("cyclic group order must be at least 1");
    if (n > 65535)
        throw ResourceExceeded("cyclic group degree exceeds the permutation point limit");
    std::vector<Point> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    return PermGroup(n, {Perm(std::move(img))}, cfg);
}

PermGroup dicyclic_group(unsigned order, const Config& cfg) {
    if (order % 4 != 0 || order < 8)
        throw ParseError("dicyclic group order must be a multiple of 4, at least 8");
    if (order > 65535)
        throw ResourceExceeded("dicyclic group degree exceeds the permutation point limit");
    const unsigned n2 = order / 2; // order of x
    const unsigned m = order / 4;  // y^2 = x^m
    // Points 0..n2-1 are x^i, points n2..order-1 are x^i y; generators act by
    // right translation.
    std::vector<Point> xi(order), yi(order);
    for (unsigned i = 0; i < n2; ++i) {
        xi[i] = static_cast<Point>((i + 1) % n2);
        xi[n2 + i] = static_cast<Point>(n2 + (i + n2 - 1) % n2);
        yi[i] = static_cast<Point>(n2 + i);
        yi[n2 + i] = static_cast<Point>((i + m) % n2);
    }
    return PermGroup(order, {Perm(std::move(xi)), Perm(std::move(yi))}, cfg);
}

PermGroup semidirect_product(const PermGroup& a, const PermGroup& b,
                             const std::vector<std::vector<Perm>>& action) {
    const auto& agens = a.generators();
    const auto& bgens = b.generators();
    if (action.size() != bgens.size())
        throw ValidationError(
            "semidirect product needs one automorphism per generator of the acting group");

    const auto& elems = a.elements();
    const unsigned na = static_cast<unsigned>(elems.size());
    std::unordered_map<Perm, unsigned, PermHash> index;
    index.reserve(na * 2);
    for (unsigned i = 0; i < na; ++i) index.emplace(elems[i], i);
    const unsigned id_idx = index.at(a.identity());

    // Extend each generator-image map to the whole base group and verify it
    // is an automorphism.
    std::vector<std::vector<unsigned>> phi(action.size());
    for (std::size_t bi = 0; bi < action.size(); ++bi) {
        if (action[bi].size() != agens.size())
            throw ValidationError(
                "automorphism must list an image for every base-group generator");
        std::vector<unsigned> gen_img(agens.size());
        for (std::size_t j = 0; j < agens.size(); ++j) {
            auto it = index.find(action[bi][j]);
            if (action[bi][j].degree() != a.degree() || it == index.end())
                throw ValidationError("automorphism image is not in the base group");
            gen_img[j] = it->second;
        }
        std::vector<int> img(na, -1);
        img[id_idx] = static_cast<int>(id_idx);
        std::queue<unsigned> bfs;
        bfs.push(id_idx);
        while (!bfs.empty()) {
            unsigned xi = bfs.front();
            bfs.pop();
            for (std::size_t j = 0; j < agens.size(); ++j) {
                unsigned yi = index.at(elems[xi] * agens[j]);
                if (img[yi] < 0) {
                    img[yi] = static_cast<int>(
                        index.at(elems[img[xi]] * elems[gen_img[j]]));
                    bfs.push(yi);
                }
            }
        }
        // Every multiplication edge must commute with the map, and the map
        // must be a bijection; together this proves it is an automorphism.
        std::vector<char> seen(na, 0);
        for (unsigned xi = 0; xi < na; ++xi) {
            if (img[xi] < 0) throw InternalError("automorphism extension did not cover the group");
            if (seen[img[xi]]++)
                throw ValidationError("generator images do not define an automorphism");
            for (std::size_t j = 0; j < agens.size(); ++j) {
                unsigned lhs = index.at(elems[xi] * agens[j]);
                unsigned rhs = index.at(elems[img[xi]] * elems[gen_img[j]]);
                if (static_cast<unsigned>(img[lhs]) != rhs)
                    throw ValidationError("generator images do not define an automorphism");
            }
        }
        phi[bi].assign(img.begin(), img.end());
    }

    const unsigned db = b.degree();
    if (static_cast<unsigned long long>(na) + db > 65535)
        throw ResourceExceeded("semidirect product degree exceeds the permutation point limit");
    const unsigned deg = na + db;

    std::vector<Perm> gens;
    for (const Perm& ag : agens) {
        std::vector<Point> v(deg);
        for (unsigned i = 0; i < na; ++i)
            v[i] = static_cast<Point>(index.at(elems[i] * ag));
        for (unsigned p = 0; p < db; ++p) v[na + p] = static_cast<Point>(na + p);
        gens.emplace_back(std::move(v));
    }
    for (std::size_t bi = 0; bi < bgens.size(); ++bi) {
        std::vector<Point> v(deg);
        for (unsigned i = 0; i < na; ++i) v[i] = static_cast<Point>(phi[bi][i]);
        for (unsigned p = 0; p < db; ++p)
            v[na + p] = static_cast<Point>(na + bgens[bi][p]);
        gens.emplace_back(std::move(v));
    }

    PermGroup result(deg, std::move(gens), a.config());
    if (b.order() != 0 && a.order() > std::numeric_limits<std::uint64_t>::max() / b.order())
        throw ResourceExceeded("semidirect product order overflows");
    if (result.order() != a.order() * b.order())
        throw ValidationError(
            "action maps are incompatible with the acting group's relations");
    return result;
}

// ---------------------------------------------------------------------------
// Zoo: data loading
// ---------------------------------------------------------------------------

Zoo Zoo::with_builtin_data() {
    Zoo z;
    z.load_catalog_text(builtin_catalog_text(), "builtin catalog");
    z.load_presentations_text(builtin_presentations_text(), "builtin presentations");
    return z;
}

void Zoo::load_catalog_text(const std::string& text, const std::string& source) {
    std::vector<CatalogEntry> entries;
    std::istringstream in(text);
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::string where = source + ":" + std::to_string(lineno);
        auto fields = split_on(t, " :: ");
        if (fields.size() != 4)
            throw ParseError(where + ": expected 'name :: order :: construction :: provenance'");
        CatalogEntry e;
        e.name = strip_spaces(fields[0]);
        e.order = parse_u64(fields[1], where);
        e.construction = trim(fields[2]);
        e.provenance = trim(fields[3]);
        if (e.name.empty() || e.order == 0 || e.construction.empty())
            throw ParseError(where + ": empty field");
        for (const auto& prev : entries)
            if (prev.name == e.name)
                throw ParseError(where + ": duplicate catalog name '" + e.name + "'");
        entries.push_back(std::move(e));
    }
    catalog_ = std::move(entries);
    cache_.clear();
}

void Zoo::load_presentations_text(const std::string& text, const std::string& source) {
    std::vector<PresentationEntry> entries;
    std::istringstream in(text);
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::string where = source + ":" + std::to_string(lineno);
        auto fields = split_on(t, " :: ");
        if (fields.size() != 4)
            throw ParseError(where + ": expected 'name :: order :: presentation :: provenance'");
        PresentationEntry e;
        e.name = strip_spaces(fields[0]);
        e.order = parse_u64(fields[1], where);
        e.text = trim(fields[2]);
        e.provenance = trim(fields[3]);
        if (e.name.empty() || e.order == 0 || e.text.empty())
            throw ParseError(where + ": empty field");
        try {
            e.pres = Presentation::parse(e.text);
        } catch (const ParseError& err) {
            throw ParseError(where + ": bad presentation: " + err.what());
        }
        for (const auto& prev : entries)
            if (prev.name == e.name)
                throw ParseError(where + ": duplicate presentation name '" + e.name + "'");
        entries.push_back(std::move(e));
    }
    presentations_ = std::move(entries);
    cache_.clear();
}

namespace {
std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

void Zoo::load_catalog_file(const std::string& path) {
    load_catalog_text(read_file(path), path);
}

void Zoo::load_presentations_file(const std::string& path) {
    load_presentations_text(read_file(path), path);
}

const CatalogEntry* Zoo::find_entry(const std::string& name) const {
    for (const auto& e : catalog_)
        if (e.name == name) return &e;
    return nullptr;
}

const PresentationEntry* Zoo::find_presentation(const std::string& name) const {
    for (const auto& e : presentations_)
        if (e.name == name) return &e;
    return nullptr;
}

void Zoo::validate_catalog(const Config& cfg) const {
    for (const auto& e : catalog_) parse(e.name, cfg);
}

// ---------------------------------------------------------------------------
// Zoo: specification parsing
// ---------------------------------------------------------------------------

GroupPtr Zoo::parse(const std::string& spec, const Config& cfg) const {
    const std::string t = trim(spec);
    if (t.empty()) throw ParseError("empty group specification");
    return parse_product(t, cfg);
}

GroupPtr Zoo::parse_product(const std::string& text, const Config& cfg) const {
    auto parts = split_product_terms(text);
    if (parts.size() == 1) return parse_atom(parts[0], cfg);
    std::vector<GroupPtr> factors;
    factors.reserve(parts.size());
    for (const auto& p : parts) factors.push_back(parse_atom(p, cfg));
    return make_product(std::move(factors), cfg);
}

namespace {

void attach_registry_presentation(Group& g, const PresentationEntry& pe) {
    const auto& gens = g.perm.generators();
    if (pe.pres.gens.size() != gens.size())
        throw ValidationError("stored presentation for '" + pe.name + "' lists " +
                              std::to_string(pe.pres.gens.size()) +
                              " generators but the construction has " +
                              std::to_string(gens.size()));
    if (!relators_hold(pe.pres, gens, g.perm.degree()))
        throw ValidationError("stored presentation for '" + pe.name +
                              "' does not hold on the constructed generators");
    g.pres = pe.pres;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

} // namespace

GroupPtr Zoo::parse_atom(const std::string& raw, const Config& cfg) const {
    const std::string text = strip_spaces(raw);
    if (text.empty()) throw ParseError("empty group specification");
    if (auto it = cache_.find(text); it != cache_.end()) return it->second;

    auto remember = [&](GroupPtr g) {
        cache_.emplace(text, g);
        return g;
    };

    // 1. Catalog name (guarded against self-referential definitions).
    if (const CatalogEntry* e = find_entry(text); e && !building_.count(text)) {
        building_.insert(text);
        GroupPtr inner;
        try {
            inner = parse_product(e->construction, cfg);
        } catch (...) {
            building_.erase(text);
            throw;
        }
        building_.erase(text);
        if (inner->order() != e->order)
            throw ValidationError("catalog entry '" + text + "' built with order " +
                                  std::to_string(inner->order()) + ", declared " +
                                  std::to_string(e->order));
        auto g = std::make_shared<Group>();
        g->spec = e->name;
        g->provenance = e->provenance;
        g->perm = inner->perm;
        g->factors = inner->factors;
        g->pres = inner->pres;
        if (const PresentationEntry* pe = find_presentation(e->name); pe && !g->pres)
            attach_registry_presentation(*g, *pe);
        return remember(g);
    }

    // 2. Binary polyhedral names.
    if (const PolyhedralDef* d = polyhedral_def(text)) {
        Presentation p = Presentation::parse(d->pres);
        PermGroup pg = todd_coxeter_regular(p, cfg, d->order);
        return remember(wrap_atom(std::move(pg), d->name, std::move(p), "standard"));
    }

    // 3. C(n) and Q(m).
    if ((text.rfind("C(", 0) == 0 || text.rfind("Q(", 0) == 0) &&
        text.find(')') == text.size() - 1) {
        const std::string num = text.substr(2, text.size() - 3);
        if (!all_digits(num)) throw ParseError("bad group order in '" + text + "'");
        const std::uint64_t n = parse_u64(num, "'" + text + "'");
        if (n > 65535)
            throw ResourceExceeded("group order in '" + text + "' exceeds the point limit");
        if (text[0] == 'C') {
            PermGroup pg = cyclic_group(static_cast<unsigned>(n), cfg);
            std::string pt = "a | a^" + std::to_string(n);
            return remember(
                wrap_atom(std::move(pg), text, Presentation::parse(pt), "standard"));
        }
        PermGroup pg = dicyclic_group(static_cast<unsigned>(n), cfg);
        std::string pt = "x,y | x^" + std::to_string(n / 2) + ", y^2=x^" +
                         std::to_string(n / 4) + ", Y*x*y=X";
        return remember(
            wrap_atom(std::move(pg), text, Presentation::parse(pt), "standard"));
    }

    // 4. SG(order,id): stored presentation.
    if (text.rfind("SG(", 0) == 0 && text.find(')') == text.size() - 1) {
        const PresentationEntry* pe = find_presentation(text);
        if (!pe)
            throw ParseError("no stored presentation for '" + text + "'");
        PermGroup pg = todd_coxeter_regular(pe->pres, cfg, pe->order);
        return remember(wrap_atom(std::move(pg), text, pe->pres, pe->provenance));
    }

    // 5. Explicit permutation group: perm[d]:cycles;cycles;...
    if (text.rfind("perm[", 0) == 0) {
        const std::size_t close = text.find(']');
        if (close == std::string::npos || close + 1 >= text.size() ||
            text[close + 1] != ':')
            throw ParseError("expected 'perm[degree]:cycles;...' in '" + text + "'");
        const std::string dstr = text.substr(5, close - 5);
        if (!all_digits(dstr)) throw ParseError("bad degree in '" + text + "'");
        const std::uint64_t d = parse_u64(dstr, "'" + text + "'");
        if (d == 0 || d > 65535) throw ParseError("bad degree in '" + text + "'");
        std::vector<Perm> gens;
        for (const auto& cyc : split_on(text.substr(close + 2), ";")) {
            if (trim(cyc).empty())
                throw ParseError("empty generator in '" + text + "'");
            gens.push_back(Perm::from_cycles(cyc, static_cast<unsigned>(d)));
        }
        if (gens.empty()) throw ParseError("no generators in '" + text + "'");
        return remember(wrap_atom(PermGroup(static_cast<unsigned>(d), std::move(gens), cfg),
                                  text, std::nullopt, "user"));
    }

    // 6. Inline presentation: <gens | relators>.
    if (text.front() == '<') {
        if (text.back() != '>')
            throw ParseError("unterminated presentation in '" + text + "'");
        Presentation p = Presentation::parse(text.substr(1, text.size() - 2));
        PermGroup pg = todd_coxeter_regular(p, cfg, 0);
        return remember(wrap_atom(std::move(pg), text, std::move(p), "user"));
    }

    // 7. Direct power: atom^k.
    {
        int depth = 0;
        std::size_t caret = std::string::npos;
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == '(' || c == '[' || c == '<') ++depth;
            else if (c == ')' || c == ']' || c == '>') --depth;
            else if (c == '^' && depth == 0) caret = i;
        }
        if (caret != std::string::npos && caret > 0 &&
            all_digits(text.substr(caret + 1))) {
            const std::uint64_t k = parse_u64(text.substr(caret + 1), "'" + text + "'");
            if (k == 0) throw ParseError("group power must be at least 1 in '" + text + "'");
            GroupPtr base = parse_atom(text.substr(0, caret), cfg);
            if (k == 1) return remember(base);
            std::vector<GroupPtr> factors(static_cast<std::size_t>(k), base);
            auto g = make_product(std::move(factors), cfg);
            return remember(g);
        }
    }

    throw ParseError("unknown group specification '" + text + "'");
}

} // namespace eichler
