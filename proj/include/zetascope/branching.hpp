#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "space.hpp"

namespace zetascope {

// Integer-weighted formal sum of labeled irreducibles of K or M.
// Labels may be formal tensor products "a*b" (sorted components, "1" dropped).
struct VirtualRep {
  enum class Group { K, M };
  Group tag;
  std::map<std::string, long> terms;  // zero weights absent

  static VirtualRep zero(Group g) { return {g, {}}; }
  static VirtualRep single(Group g, const std::string& label, long w = 1) {
    VirtualRep v{g, {}};
    if (w != 0) v.terms[label] = w;
    return v;
  }

  VirtualRep& add(const std::string& label, long w) {
    auto it = terms.find(label);
    long total = (it == terms.end() ? 0 : it->second) + w;
    if (total == 0) {
      if (it != terms.end()) terms.erase(it);
    } else {
      terms[label] = total;
    }
    return *this;
  }

  VirtualRep operator+(const VirtualRep& o) const {
    if (tag != o.tag) throw input_error("cannot add K- and M-virtual representations");
    VirtualRep v = *this;
    for (const auto& [l, w] : o.terms) v.add(l, w);
    return v;
  }
  VirtualRep operator-(const VirtualRep& o) const { return *this + o * -1; }
  VirtualRep operator*(long c) const {
    VirtualRep v{tag, {}};
    if (c != 0)
      for (const auto& [l, w] : terms) v.terms[l] = w * c;
    return v;
  }
  bool operator==(const VirtualRep& o) const { return tag == o.tag && terms == o.terms; }
  bool is_zero() const { return terms.empty(); }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [l, w] : terms) {
      if (!first) out << (w > 0 ? " + " : " - ");
      else if (w < 0) out << "-";
      long a = std::abs(w);
      if (a != 1) out << a << "*";
      out << l;
      first = false;
    }
    return out.str();
  }
};

namespace detail {

inline std::vector<std::string> split_product(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : label) {
    if (c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline std::string join_product(std::vector<std::string> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), std::string("1")), parts.end());
  if (parts.empty()) return "1";
  std::sort(parts.begin(), parts.end());
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

}  // namespace detail

// Formal tensor product (labels multiply; no decomposition into irreducibles).
inline VirtualRep tensor(const VirtualRep& a, const VirtualRep& b) {
  if (a.tag != b.tag) throw input_error("cannot tensor K- and M-virtual representations");
  VirtualRep v{a.tag, {}};
  for (const auto& [la, wa] : a.terms)
    for (const auto& [lb, wb] : b.terms) {
      auto parts = detail::split_product(la);
      for (const auto& p : detail::split_product(lb)) parts.push_back(p);
      v.add(detail::join_product(parts), wa * wb);
    }
  return v;
}

namespace detail {

// Branching of a single K-generator label to M, per the family tables.
inline VirtualRep restrict_generator(const SpacePreset& s, const std::string& label) {
  using G = VirtualRep::Group;
  auto M = [](const std::string& l, long w = 1) { return VirtualRep::single(G::M, l, w); };
  if (label == "1") return M("1");
  switch (s.family) {
    case Family::RealH: {
      int m = s.rank_param;
      if (label == "s+" || label == "s-") return M("s0");
      if (label.size() > 1 && label[0] == 'l') {
        int p = std::stoi(label.substr(1));
        if (p == 0) return M("1");
        if (p >= 1 && p <= m - 1) {
          auto low = (p == 1) ? M("1") : M("sigma" + std::to_string(p - 1));
          return M("sigma" + std::to_string(p)) + low;
        }
      }
      break;
    }
    case Family::ComplexH: {
      int n = s.rank_param;
      // L{p,q}: exterior powers of the (anti)holomorphic K-module.
      if (label.rfind("L{", 0) == 0) {
        auto comma = label.find(',');
        int p = std::stoi(label.substr(2, comma - 2));
        int q = std::stoi(label.substr(comma + 1, label.size() - comma - 2));
        if (p < 0 || q < 0 || p + q > n - 1) break;
        VirtualRep v = VirtualRep::zero(G::M);
        for (int a = p - 1; a <= p; ++a)
          for (int b = q - 1; b <= q; ++b) {
            if (a < 0 || b < 0) continue;
            v.add(a == 0 && b == 0 ? "1" : "M{" + std::to_string(a) + "," + std::to_string(b) + "}", 1);
          }
        return v;
      }
      if (label.rfind("w", 0) == 0) return M("z" + label.substr(1));
      if (label == "K/2") return M("halfk");
      break;
    }
    case Family::QuaternionicH: {
      if (label == "l1") return M("sigma1") + M("sigmaprime") + M("1");
      if (label == "lprime") return M("sigmaprime");
      if (label == "p") return M("q");
      break;
    }
    case Family::CayleyH: {
      if (label == "l1") return M("s7") + M("1");
      if (label == "l2") return M("sigma2") + M("sigma1") + M("s7");
      if (label == "s9") return M("s7") + M("sigma1") + M("1");
      break;
    }
  }
  throw input_error("label outside the branching generator table: " + label);
}

}  // namespace detail

// Restriction map r: R(K) -> R(M), linear and multiplicative over formal products.
inline VirtualRep restrict_rep(const VirtualRep& gamma, const SpacePreset& s) {
  if (gamma.tag != VirtualRep::Group::K) throw input_error("restrict expects a K-virtual representation");
  VirtualRep out = VirtualRep::zero(VirtualRep::Group::M);
  for (const auto& [label, w] : gamma.terms) {
    VirtualRep prod = VirtualRep::single(VirtualRep::Group::M, "1");
    for (const auto& part : detail::split_product(label))
      prod = tensor(prod, detail::restrict_generator(s, part));
    out = out + prod * w;
  }
  return out;
}

// Canonical sigma-admissible lift from the catalog tables.
inline VirtualRep admissible_lift(const std::string& sigma_label, const SpacePreset& s) {
  using G = VirtualRep::Group;
  auto K = [](const std::string& l, long w = 1) { return VirtualRep::single(G::K, l, w); };
  switch (s.family) {
    case Family::RealH: {
      int m = s.rank_param;
      if (sigma_label == "1" || sigma_label == "trivial") return K("1");
      if (sigma_label == "s0" || sigma_label == "spinor" || sigma_label == "dirac") return K("s+");
      if (sigma_label.rfind("sigma", 0) == 0) {
        int p = std::stoi(sigma_label.substr(5));
        if (p >= 1 && p <= m - 1) {
          VirtualRep v = VirtualRep::zero(G::K);
          for (int l = 0; l <= p; ++l) v.add(l == 0 ? "1" : "l" + std::to_string(l), (p - l) % 2 == 0 ? 1 : -1);
          return v;
        }
      }
      break;
    }
    case Family::ComplexH: {
      int n = s.rank_param;
      if (sigma_label == "1" || sigma_label == "trivial") return K("1");
      if (sigma_label == "halfk") return K("K/2");
      if (sigma_label.rfind("z", 0) == 0) return K("w" + sigma_label.substr(1));
      if (sigma_label.rfind("M{", 0) == 0) {
        auto comma = sigma_label.find(',');
        int p = std::stoi(sigma_label.substr(2, comma - 2));
        int q = std::stoi(sigma_label.substr(comma + 1, sigma_label.size() - comma - 2));
        if (p < 0 || q < 0 || p + q > n - 1) break;
        VirtualRep v = VirtualRep::zero(G::K);
        for (int r = 0; q - r >= 0; ++r)
          for (int sft = 0; p - sft >= 0; ++sft)
            v.add("L{" + std::to_string(p - sft) + "," + std::to_string(q - r) + "}",
                  (r + sft) % 2 == 0 ? 1 : -1);
        return v;
      }
      break;
    }
    case Family::QuaternionicH: {
      if (sigma_label == "1" || sigma_label == "trivial") return K("1");
      if (sigma_label == "sigma1") return K("l1") - K("lprime") - K("1");
      if (sigma_label == "sigmaprime") return K("lprime");
      if (sigma_label == "q") return K("p");
      break;
    }
    case Family::CayleyH: {
      if (sigma_label == "1" || sigma_label == "trivial") return K("1");
      if (sigma_label == "sigma1") return K("s9") - K("l1");
      if (sigma_label == "sigma2") return K("l2") - K("s9") + K("1");
      if (sigma_label == "s7") return K("l1") - K("1");
      break;
    }
  }
  throw input_error("sigma outside the admissible-lift catalog: " + sigma_label);
}

// Parse expressions like "l2-l1+l0" or "s9-l1" or "2*l1-1".
inline VirtualRep parse_virtual_k(const std::string& expr) {
  VirtualRep v = VirtualRep::zero(VirtualRep::Group::K);
  std::string token;
  long sign = 1;
  auto flush = [&]() {
    if (token.empty()) return;
    long coef = 1;
    std::string label = token;
    auto star = token.find('*');
    if (star != std::string::npos && token.find_first_not_of("0123456789") >= star) {
      coef = std::stol(token.substr(0, star));
      label = token.substr(star + 1);
    }
    if (label == "l0") label = "1";
    v.add(label, sign * coef);
    token.clear();
  };
  for (char c : expr) {
    if (c == ' ') continue;
    if ((c == '+' || c == '-') && !token.empty()) {
      flush();
      sign = (c == '-') ? -1 : 1;
    } else if ((c == '+' || c == '-') && token.empty()) {
      sign = (c == '-') ? -sign : sign;
    } else {
      token += c;
    }
  }
  flush();
  return v;
}

}  // namespace zetascope
