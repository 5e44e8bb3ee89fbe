#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace symlab {

/// Permutation of {0..n-1} in one-line notation: i -> p[i].
using Perm = std::vector<int>;

Perm identity_perm(int n);
/// (p o q)(i) = p[q[i]].
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
int perm_order(const Perm& p);
/// All permutations of {0..n-1} in lexicographic order.
std::vector<Perm> all_perms(int n);

/// Parses 1-based cycle notation such as "(12)", "(1 3 2)", "(12)(34)", "()" or "id".
Perm parse_cycles(std::string_view text, int n);
/// 1-based cycle notation; "()" for the identity.
std::string to_cycles(const Perm& p);

/// True when the set contains the identity and is closed under composition
/// (for a finite set this also gives inverses).
bool is_subgroup(const std::vector<Perm>& set);

}  // namespace symlab
