#pragma once

#include <concepts>
#include <string>

namespace symlab {

/// Exact field-like scalar usable as the coefficient type of the generic
/// algebra code. Both FieldElement and RationalFunction model it. Elements carry
/// their own context (field, symbols), so constants are made from a prototype.
template <class S>
concept Scalar = std::regular<S> && requires(const S a, const S b, long n) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<S>;
  { a.one_like() } -> std::convertible_to<S>;
  { a.like(n) } -> std::convertible_to<S>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { a.is_compound() } -> std::convertible_to<bool>;
};

}  // namespace symlab
