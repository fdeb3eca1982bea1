#include "semiforge/builders.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "semiforge/inclusion.hpp"
#include "semiforge/structure.hpp"

namespace semiforge {

namespace {

bool is_two_element_group(const FiniteSemigroup& s) {
  return s.order() == 2 && is_group(s);
}

// Right-zero or trivial, the reading of "in R0" used by the theta laws.
bool right_zero_like(const FiniteSemigroup& s) { return is_right_zero(s); }

void verify_class(const FiniteSemigroup& s, const char* name) {
  if (!member_of_class_serial(s, predefined_classes().at(name)).member) {
    throw BuilderError(std::string("built table not in ") + name + " class");
  }
}

}  // namespace

FiniteSemigroup trivial_semigroup() { return FiniteSemigroup(1, {0}); }

FiniteSemigroup left_zero(int k) {
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) table[a * k + b] = a;
  }
  return FiniteSemigroup(k, std::move(table));
}

FiniteSemigroup right_zero(int k) {
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) table[a * k + b] = b;
  }
  return FiniteSemigroup(k, std::move(table));
}

FiniteSemigroup rectangular_band(int rows, int cols) {
  int n = rows * cols;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < rows; ++i) {
    for (int l = 0; l < cols; ++l) {
      for (int j = 0; j < rows; ++j) {
        for (int m = 0; m < cols; ++m) {
          table[(i * cols + l) * n + (j * cols + m)] = i * cols + m;
        }
      }
    }
  }
  return FiniteSemigroup(n, std::move(table));
}

FiniteSemigroup cyclic_group(int k) {
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) table[a * k + b] = (a + b) % k;
  }
  return FiniteSemigroup(k, std::move(table));
}

int ComponentSpec::size() const {
  switch (kind) {
    case Kind::trivial: return 1;
    case Kind::rectangular_band: return rows * cols;
    case Kind::left_zero: return rows;
    case Kind::right_zero: return rows;
    case Kind::g2: return 2;
  }
  return 1;
}

FiniteSemigroup ComponentSpec::build() const {
  switch (kind) {
    case Kind::trivial: return trivial_semigroup();
    case Kind::rectangular_band: return rectangular_band(rows, cols);
    case Kind::left_zero: return left_zero(rows);
    case Kind::right_zero: return right_zero(rows);
    case Kind::g2: return cyclic_group(2);
  }
  return trivial_semigroup();
}

std::vector<ComponentSpec> parse_chain_spec(std::string_view text) {
  std::vector<ComponentSpec> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t a = pos, b = end;
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    std::string_view item = text.substr(a, b - a);
    auto number = [&](std::string_view digits, std::size_t at) {
      int value = 0;
      if (digits.empty()) throw ParseError(at, "expected a size");
      for (char c : digits) {
        if (c < '0' || c > '9') throw ParseError(at, "expected a size");
        value = value * 10 + (c - '0');
        if (value > 1 << 12) throw ParseError(at, "size too large");
      }
      if (value < 1) throw ParseError(at, "size must be at least 1");
      return value;
    };
    if (item == "trivial") {
      out.push_back({ComponentSpec::Kind::trivial, 1, 1});
    } else if (item == "g2") {
      out.push_back({ComponentSpec::Kind::g2, 2, 1});
    } else if (item.starts_with("rz:")) {
      out.push_back({ComponentSpec::Kind::right_zero, number(item.substr(3), a + 3), 1});
    } else if (item.starts_with("lz:")) {
      out.push_back({ComponentSpec::Kind::left_zero, number(item.substr(3), a + 3), 1});
    } else if (item.starts_with("rb:")) {
      std::string_view dims = item.substr(3);
      std::size_t x = dims.find('x');
      if (x == std::string_view::npos) {
        throw ParseError(a + 3, "expected PxQ");
      }
      out.push_back({ComponentSpec::Kind::rectangular_band,
                     number(dims.substr(0, x), a + 3),
                     number(dims.substr(x + 1), a + 4 + x)});
    } else {
      throw ParseError(a, "unknown component '" + std::string(item) + "'");
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

FiniteSemigroup build_chain(std::span<const ComponentSpec> specs) {
  if (specs.empty()) throw EmptySpecError("chain spec list is empty");
  for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
    if (specs[i].kind == ComponentSpec::Kind::g2) {
      throw NontrivialG2BelowTopError(
          "a group of order two is only allowed on top of the chain");
    }
  }
  std::vector<FiniteSemigroup> parts;
  std::vector<int> offset;
  int n = 0;
  for (const auto& spec : specs) {
    offset.push_back(n);
    parts.push_back(spec.build());
    n += parts.back().order();
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (std::size_t ca = 0; ca < parts.size(); ++ca) {
    for (std::size_t cb = 0; cb < parts.size(); ++cb) {
      for (int a = 0; a < parts[ca].order(); ++a) {
        for (int b = 0; b < parts[cb].order(); ++b) {
          int x = offset[ca] + a, y = offset[cb] + b;
          int p;
          if (ca == cb) {
            p = offset[ca] + parts[ca].product(a, b);
          } else {
            p = ca < cb ? x : y;  // the lower element absorbs
          }
          table[x * n + y] = p;
        }
      }
    }
  }
  FiniteSemigroup out(n, std::move(table));
  verify_class(out, "THM1");
  return out;
}

FiniteSemigroup build_strong_semilattice(const StrongSemilatticeData& data) {
  const FiniteSemigroup& y = data.y;
  int k = y.order();
  if (!is_semilattice(y)) throw BuilderError("y table is not a semilattice");
  if (static_cast<int>(data.components.size()) != k) {
    throw BuilderError("expected one component per element of y");
  }
  auto below = [&](int a, int b) { return y.product(a, b) == a; };
  auto hom_to = [&](int beta, int alpha) -> const std::vector<int>* {
    if (alpha == beta) return nullptr;  // identity
    auto it = data.homs.find({beta, alpha});
    if (it == data.homs.end()) {
      throw IncompatibleHomsError("missing hom " + std::to_string(beta)
                                  + " -> " + std::to_string(alpha));
    }
    return &it->second;
  };
  auto apply = [&](const std::vector<int>* phi, int local) {
    return phi ? (*phi)[local] : local;
  };
  for (const auto& [key, phi] : data.homs) {
    auto [beta, alpha] = key;
    if (alpha < 0 || alpha >= k || beta < 0 || beta >= k || !below(alpha, beta)) {
      throw IncompatibleHomsError("hom " + std::to_string(beta) + " -> "
                                  + std::to_string(alpha)
                                  + " does not follow the order of y");
    }
    const FiniteSemigroup& src = data.components[beta];
    const FiniteSemigroup& dst = data.components[alpha];
    if (static_cast<int>(phi.size()) != src.order()) {
      throw NotAHomomorphismError("hom map has wrong length");
    }
    for (int v : phi) {
      if (v < 0 || v >= dst.order()) {
        throw NotAHomomorphismError("hom image out of range");
      }
    }
    if (alpha == beta) {
      for (int v = 0; v < src.order(); ++v) {
        if (phi[v] != v) {
          throw IncompatibleHomsError("hom onto the same component must be the identity");
        }
      }
    }
    for (int u = 0; u < src.order(); ++u) {
      for (int v = 0; v < src.order(); ++v) {
        if (phi[src.product(u, v)] != dst.product(phi[u], phi[v])) {
          throw NotAHomomorphismError("map " + std::to_string(beta) + " -> "
                                      + std::to_string(alpha)
                                      + " is not a homomorphism");
        }
      }
    }
  }
  // phi_{gamma->alpha} must factor through any middle component.
  for (int alpha = 0; alpha < k; ++alpha) {
    for (int beta = 0; beta < k; ++beta) {
      for (int gamma = 0; gamma < k; ++gamma) {
        if (!(below(alpha, beta) && below(beta, gamma))) continue;
        if (alpha == beta || beta == gamma) continue;
        const auto* ga = hom_to(gamma, alpha);
        const auto* gb = hom_to(gamma, beta);
        const auto* ba = hom_to(beta, alpha);
        for (int v = 0; v < data.components[gamma].order(); ++v) {
          if (apply(ga, v) != apply(ba, apply(gb, v))) {
            throw IncompatibleHomsError(
                "homs do not compose through component " + std::to_string(beta));
          }
        }
      }
    }
  }
  std::vector<int> offset(k, 0);
  int n = 0;
  for (int a = 0; a < k; ++a) {
    offset[a] = n;
    n += data.components[a].order();
  }
  std::vector<int> comp(n);
  for (int a = 0; a < k; ++a) {
    for (int v = 0; v < data.components[a].order(); ++v) comp[offset[a] + v] = a;
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      int a = comp[x], b = comp[z];
      int d = y.product(a, b);
      int u = apply(a == d ? nullptr : hom_to(a, d), x - offset[a]);
      int v = apply(b == d ? nullptr : hom_to(b, d), z - offset[b]);
      table[x * n + z] = offset[d] + data.components[d].product(u, v);
    }
  }
  FiniteSemigroup out(n, std::move(table));
  bool all_rb_or_g2 = std::all_of(
      data.components.begin(), data.components.end(), [](const FiniteSemigroup& c) {
        return is_rectangular_band(c) || is_two_element_group(c);
      });
  if (all_rb_or_g2) verify_class(out, "THM5");
  return out;
}

namespace {

struct ThetaLayout {
  int total = 0;
  std::vector<int> component_of;   // global element -> component id
  std::vector<int> local_of;       // global element -> local index
  std::vector<std::vector<int>> elements;  // component id -> global elements
};

ThetaLayout theta_layout(const ThetaData& data) {
  int k = data.y.order();
  if (!is_semilattice(data.y)) throw BuilderError("y table is not a semilattice");
  if (static_cast<int>(data.components.size()) != k) {
    throw BuilderError("expected one component per element of y");
  }
  ThetaLayout lay;
  lay.elements = data.elements;
  if (lay.elements.empty()) {
    int n = 0;
    for (const auto& c : data.components) {
      auto& list = lay.elements.emplace_back(c.order());
      std::iota(list.begin(), list.end(), n);
      n += c.order();
    }
  }
  if (static_cast<int>(lay.elements.size()) != k) {
    throw BuilderError("expected one element list per component");
  }
  for (int a = 0; a < k; ++a) {
    if (static_cast<int>(lay.elements[a].size()) != data.components[a].order()) {
      throw BuilderError("element list does not match component order");
    }
    lay.total += data.components[a].order();
  }
  lay.component_of.assign(lay.total, -1);
  lay.local_of.assign(lay.total, -1);
  for (int a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < lay.elements[a].size(); ++i) {
      int g = lay.elements[a][i];
      if (g < 0 || g >= lay.total || lay.component_of[g] >= 0) {
        throw BuilderError("element lists must partition 0..n-1");
      }
      lay.component_of[g] = a;
      lay.local_of[g] = static_cast<int>(i);
    }
  }
  if (static_cast<int>(data.theta.size()) != lay.total) {
    throw BuilderError("expected one theta map per element");
  }
  for (const auto& map : data.theta) {
    if (static_cast<int>(map.size()) != lay.total) {
      throw BuilderError("theta map has wrong length");
    }
    for (int v : map) {
      if (v < 0 || v >= lay.total) throw BuilderError("theta image out of range");
    }
  }
  return lay;
}

}  // namespace

FiniteSemigroup build_theta_product(const ThetaData& data) {
  ThetaLayout lay = theta_layout(data);
  const FiniteSemigroup& y = data.y;
  int k = y.order();
  int n = lay.total;
  // Product inside a single component, both arguments global.
  auto comp_product = [&](int d, int u, int v) {
    return lay.elements[d][data.components[d].product(lay.local_of[u],
                                                      lay.local_of[v])];
  };

  // (a): theta_x restricted to S_beta lands in S_alphabeta and respects the
  // component products.
  for (int x = 0; x < n; ++x) {
    int a = lay.component_of[x];
    for (int yy = 0; yy < n; ++yy) {
      int ab = y.product(a, lay.component_of[yy]);
      if (lay.component_of[data.theta[x][yy]] != ab) {
        throw ThetaConditionViolatedError(
            'a', "theta_" + std::to_string(x) + "(" + std::to_string(yy)
                     + ") outside S_alphabeta");
      }
    }
    for (int b = 0; b < k; ++b) {
      int ab = y.product(a, b);
      for (int u : lay.elements[b]) {
        for (int v : lay.elements[b]) {
          int lhs = data.theta[x][comp_product(b, u, v)];
          int rhs = comp_product(ab, data.theta[x][u], data.theta[x][v]);
          if (lhs != rhs) {
            throw ThetaConditionViolatedError(
                'a', "theta_" + std::to_string(x)
                         + " is not a homomorphism on S_" + std::to_string(b));
          }
        }
      }
    }
  }
  std::vector<char> rz(k, 0), g2(k, 0);
  for (int a = 0; a < k; ++a) {
    rz[a] = right_zero_like(data.components[a]);
    g2[a] = is_two_element_group(data.components[a]);
  }
  // (b)
  for (int x = 0; x < n; ++x) {
    for (int yy = 0; yy < n; ++yy) {
      int ab = y.product(lay.component_of[x], lay.component_of[yy]);
      int w = comp_product(ab, data.theta[x][yy], data.theta[yy][x]);
      for (int c = 0; c < k; ++c) {
        if (!rz[y.product(ab, c)]) continue;
        for (int z : lay.elements[c]) {
          if (data.theta[w][z] != data.theta[yy][data.theta[x][z]]) {
            throw ThetaConditionViolatedError(
                'b', "theta_{(theta_x y)(theta_y x)} != theta_y theta_x at x="
                         + std::to_string(x) + ", y=" + std::to_string(yy)
                         + ", z=" + std::to_string(z));
          }
        }
      }
    }
  }
  // (c)
  for (int a = 0; a < k; ++a) {
    if (!g2[a]) continue;
    int one = -1;
    for (int g : lay.elements[a]) {
      if (comp_product(a, g, g) == g) one = g;
    }
    for (int z : lay.elements[a]) {
      int base = data.theta[one][z];
      for (int x : lay.elements[a]) {
        if (data.theta[x][z] != base) {
          throw ThetaConditionViolatedError(
              'c', "theta_x != theta_1 on S_" + std::to_string(a));
        }
        for (int yy : lay.elements[a]) {
          if (data.theta[x][data.theta[yy][z]] != base) {
            throw ThetaConditionViolatedError(
                'c', "theta_x theta_y != theta_1 on S_" + std::to_string(a));
          }
        }
      }
    }
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int yy = 0; yy < n; ++yy) {
      int d = y.product(lay.component_of[x], lay.component_of[yy]);
      table[x * n + yy] = comp_product(d, data.theta[x][yy], data.theta[yy][x]);
    }
  }
  FiniteSemigroup out(n, std::move(table));
  verify_class(out, "THM2");
  return out;
}

ThetaData extract_theta_data(const FiniteSemigroup& s) {
  SemilatticeDecomposition d = decompose(s);
  ThetaData data{FiniteSemigroup(d.y_order, d.y_table), {}, {}, {}};
  for (const auto& block : d.components) {
    data.components.push_back(subsemigroup(s, block));
  }
  data.elements = d.components;
  data.theta.assign(s.order(), std::vector<int>(s.order()));
  for (int x = 0; x < s.order(); ++x) {
    for (int y = 0; y < s.order(); ++y) {
      data.theta[x][y] = s.product(s.product(x, y), x);
    }
  }
  return data;
}

}  // namespace semiforge
