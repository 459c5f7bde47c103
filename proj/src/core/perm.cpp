#include "core/perm.hpp"

#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace eichler {

Perm::Perm(unsigned degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point x : img_) {
        if (x >= img_.size() || seen[x])
            throw ParseError("permutation images are not a bijection");
        seen[x] = true;
    }
}

bool Perm::is_identity() const {
    for (unsigned x = 0; x < img_.size(); ++x)
        if (img_[x] != x) return false;
    return true;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (unsigned x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<Point>(x);
    return r;
}

Perm Perm::operator*(const Perm& other) const {
    Perm r;
    r.img_.resize(img_.size());
    for (unsigned x = 0; x < img_.size(); ++x) r.img_[x] = other.img_[img_[x]];
    return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
    // maps g[x] to g[img_[x]]
    Perm r;
    r.img_.resize(img_.size());
    for (unsigned x = 0; x < img_.size(); ++x) r.img_[g.img_[x]] = g.img_[img_[x]];
    return r;
}

std::uint64_t Perm::order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t ord = 1;
    for (unsigned x = 0; x < img_.size(); ++x) {
        if (seen[x]) continue;
        std::uint64_t len = 0;
        Point y = static_cast<Point>(x);
        while (!seen[y]) {
            seen[y] = true;
            y = img_[y];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

Perm Perm::power(long long k) const {
    std::uint64_t n = order();
    long long e = k % static_cast<long long>(n);
    if (e < 0) e += static_cast<long long>(n);
    Perm acc(degree());
    Perm base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::size_t Perm::hash() const {
    // FNV-1a over the image bytes
    std::size_t h = 1469598103934665603ull;
    for (Point x : img_) {
        h ^= static_cast<std::size_t>(x & 0xff);
        h *= 1099511628211ull;
        h ^= static_cast<std::size_t>(x >> 8);
        h *= 1099511628211ull;
    }
    return h;
}

std::string Perm::to_cycles() const {
    std::vector<bool> seen(img_.size(), false);
    std::ostringstream out;
    bool any = false;
    for (unsigned x = 0; x < img_.size(); ++x) {
        if (seen[x] || img_[x] == x) {
            seen[x] = true;
            continue;
        }
        any = true;
        out << '(';
        Point y = static_cast<Point>(x);
        bool first = true;
        while (!seen[y]) {
            seen[y] = true;
            if (!first) out << ',';
            out << (y + 1);
            first = false;
            y = img_[y];
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

Perm Perm::from_cycles(const std::string& text, unsigned degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    bool any_cycle = false;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(')
            throw ParseError("cycle text: expected '(' at position " + std::to_string(i));
        ++i;
        std::vector<Point> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw ParseError("cycle text: expected a point number");
            unsigned long v = std::stoul(text.substr(start, i - start));
            if (v == 0 || v > degree)
                throw ParseError("cycle text: point " + std::to_string(v) +
                                 " out of range 1.." + std::to_string(degree));
            cyc.push_back(static_cast<Point>(v - 1));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
            } else if (i < text.size() && text[i] != ')') {
                throw ParseError("cycle text: expected ',' or ')'");
            }
        }
        if (i >= text.size()) throw ParseError("cycle text: unterminated cycle");
        ++i; // ')'
        any_cycle = true;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            Point from = cyc[k];
            Point to = cyc[(k + 1) % cyc.size()];
            if (img[from] != from)
                throw ParseError("cycle text: point " + std::to_string(from + 1) +
                                 " appears twice");
            img[from] = to;
        }
        skip_ws();
    }
    if (!any_cycle && text.find("()") == std::string::npos && !text.empty()) {
        // plain whitespace is fine; anything else was consumed above
    }
    return Perm(std::move(img));
}

} // namespace eichler
