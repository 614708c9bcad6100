#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace picmod {

// An element of Q/Z held as the canonical reduced fraction num/den with
// 0 <= num < den and gcd(num, den) = 1.  All root-of-unity scalars of the
// toolkit (form values, cocycle tables, character pairings) live here,
// written additively.  No floating point anywhere.
class QZ {
  public:
    constexpr QZ() = default;
    QZ(std::int64_t num, std::int64_t den);

    static QZ parse(std::string_view text);  // "a/b" or "a"

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    std::int64_t order() const { return den_; }  // additive order

    QZ operator+(const QZ& o) const;
    QZ operator-(const QZ& o) const;
    QZ operator-() const;
    QZ& operator+=(const QZ& o);
    QZ times(std::int64_t k) const;  // k-fold sum

    bool operator==(const QZ& o) const = default;
    std::strong_ordering operator<=>(const QZ& o) const;  // numeric order in [0,1)

    std::string str() const;  // "num/den", zero prints as "0/1"

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline QZ operator*(std::int64_t k, const QZ& s) { return s.times(k); }

}  // namespace picmod
