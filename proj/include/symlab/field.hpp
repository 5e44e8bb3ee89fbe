#pragma once

// Exact scalar fields: Q, F_p, and simple extensions base[Y]/(m(Y)) over Q or F_p.
//
// Fields are interned: two Field handles describing the same field compare equal
// by identity, and FieldElement carries only a pointer to the shared descriptor.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace symlab {

enum class FieldKind { rationals, prime, extension };

namespace detail {
struct FieldData;
}

class FieldElement;

class Field {
 public:
  static Field rationals();
  static Field prime(std::int64_t p);
  /// base[Y]/(modulus) where modulus is given lowest degree first and must be
  /// monic and irreducible. Only Q and F_p are accepted as bases.
  static Field extension(const Field& base, const std::vector<mpq_class>& modulus,
                         std::string generator);
  /// F_{p^k}, using the smallest monic irreducible modulus of degree k.
  static Field finite(std::int64_t p, int k);
  /// Q[zeta3]/(zeta3^2 + zeta3 + 1).
  static Field qzeta3();
  /// Parses `Q`, `Fp(7)`, `F(2,2)`, `Qzeta3`.
  static Field parse(std::string_view spec);

  FieldKind kind() const;
  std::int64_t characteristic() const;
  /// Degree over the prime field (or over Q).
  int degree() const;
  bool is_finite() const;
  /// Number of elements; only meaningful for finite fields.
  std::uint64_t size() const;
  Field base() const;
  /// Modulus coefficients (lowest first); empty unless kind() == extension.
  std::vector<mpq_class> modulus() const;
  const std::string& generator_name() const;
  /// Round-trips through parse() for the fields parse() can produce.
  const std::string& spec() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long v) const;
  FieldElement from_rational(const mpq_class& v) const;
  FieldElement generator() const;
  /// Element with the given canonical index in [0, size()); finite fields only.
  FieldElement element(std::uint64_t index) const;
  std::vector<FieldElement> elements() const;

  friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }

  const detail::FieldData* data() const { return data_; }

 private:
  explicit Field(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_;
  friend class FieldElement;
};

class FieldElement {
 public:
  /// Zero of Q.
  FieldElement();

  Field field() const { return Field(f_); }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  /// Throws DivisionByZero on zero.
  FieldElement inverse() const;
  FieldElement pow(std::int64_t n) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Total order on canonical representatives; for finite fields this is the
  /// order of canonical indices.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  FieldElement zero_like() const { return field().zero(); }
  FieldElement one_like() const { return field().one(); }
  FieldElement like(long v) const { return field().from_int(v); }

  /// Canonical index in [0, q) for finite fields.
  std::uint64_t index() const;
  /// Coefficients over the prime field / Q, lowest power of the generator first.
  std::vector<mpq_class> components() const;
  /// The value as a rational when it lies in the prime subfield of a
  /// characteristic-0 field.
  std::optional<mpq_class> as_rational() const;
  std::string to_string() const;
  /// True when to_string() needs parentheses to be used as a factor.
  bool is_compound() const;

 private:
  FieldElement(const detail::FieldData* f);
  const detail::FieldData* f_;
  std::vector<mpq_class> q_;       // characteristic 0
  std::vector<std::int64_t> m_;    // characteristic p
  friend class Field;
};

std::int64_t characteristic(const Field& f);

/// A primitive cube root of unity of the field with the smallest canonical
/// representative, or nullopt when none exists.
std::optional<FieldElement> primitive_cube_root(const Field& f);

bool is_prime(std::int64_t n);

}  // namespace symlab
