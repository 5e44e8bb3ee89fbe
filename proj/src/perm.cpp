#include "symlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "symlab/error.hpp"

namespace symlab {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw InputError("permutation size mismatch");
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

int perm_order(const Perm& p) {
  Perm q = p;
  int k = 1;
  while (!is_identity(q)) {
    q = compose(p, q);
    ++k;
  }
  return k;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm parse_cycles(std::string_view text, int n) {
  Perm p = identity_perm(n);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "id" || s == "e" || s == "()") return p;
  std::size_t i = 0;
  std::set<int> used;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw InputError("bad permutation '" + std::string(text) + "'");
    ++i;
    std::vector<int> cycle;
    const bool spaced = text.substr(i, text.find(')', i) - i).find_first_of(" ,") != std::string_view::npos;
    while (i < text.size() && text[i] != ')') {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("bad permutation '" + std::string(text) + "'");
      int v = 0;
      if (spaced) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      } else {
        v = text[i++] - '0';
      }
      if (v < 1 || v > n) throw InputError("permutation point " + std::to_string(v) + " out of range");
      if (!used.insert(v).second) throw InputError("point " + std::to_string(v) + " repeated in cycles");
      cycle.push_back(v - 1);
    }
    if (i >= text.size()) throw InputError("unterminated cycle in '" + std::string(text) + "'");
    ++i;
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return p;
}

std::string to_cycles(const Perm& p) {
  const bool compact = p.size() <= 9;
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!compact && !first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool is_subgroup(const std::vector<Perm>& set) {
  if (set.empty()) return false;
  std::set<Perm> s(set.begin(), set.end());
  if (!s.count(identity_perm(static_cast<int>(set.front().size())))) return false;
  for (const auto& a : s)
    for (const auto& b : s)
      if (!s.count(compose(a, b))) return false;
  return true;
}

}  // namespace symlab
