// Permutations on {0, ..., degree-1} stored as image sequences.
//
// Products compose left-to-right: (a * b) maps x to b[a[x]], so words read in
// the same order they act. Cycle text uses 1-based points for file formats.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eichler {

using Point = std::uint16_t;

class Perm {
public:
    Perm() = default;
    explicit Perm(unsigned degree);                  // identity
    explicit Perm(std::vector<Point> images);

    unsigned degree() const { return static_cast<unsigned>(img_.size()); }
    Point operator[](Point x) const { return img_[x]; }
    const std::vector<Point>& images() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;
    Perm operator*(const Perm& other) const;         // apply *this, then other
    bool operator==(const Perm& other) const { return img_ == other.img_; }
    bool operator!=(const Perm& other) const { return img_ != other.img_; }
    bool operator<(const Perm& other) const { return img_ < other.img_; }

    // conjugate by g: g^-1 * (*this) * g
    Perm conjugated_by(const Perm& g) const;

    std::uint64_t order() const;                     // lcm of cycle lengths
    Perm power(long long k) const;

    std::size_t hash() const;

    // "(1,2,3)(4,5)" with 1-based points; identity prints "()".
    std::string to_cycles() const;
    static Perm from_cycles(const std::string& text, unsigned degree);

private:
    std::vector<Point> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const { return p.hash(); }
};

} // namespace eichler
