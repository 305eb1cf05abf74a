#include "liechar/classgeom.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "liechar/common.hpp"

namespace liechar {

std::string to_string(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::Sp: return "Sp";
    case Family::SOOdd: return "SO_odd";
    case Family::SOEven: return "SO_even";
  }
  return "?";
}

Family parse_family(std::string_view name, int natural_dim) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s == "GL" || s == "A") return Family::GL;
  if (s == "SL") return Family::SL;
  if (s == "SP" || s == "C") return Family::Sp;
  if (s == "SO_ODD" || s == "SOODD" || s == "B" || s == "SPIN_ODD") return Family::SOOdd;
  if (s == "SO_EVEN" || s == "SOEVEN" || s == "D" || s == "SPIN_EVEN") return Family::SOEven;
  if (s == "SO" || s == "SPIN") {
    if (natural_dim <= 0) throw PreconditionError("SO needs a natural dimension to pick B or D");
    return natural_dim % 2 ? Family::SOOdd : Family::SOEven;
  }
  throw PreconditionError("unknown group family '" + std::string(name) + "'");
}

int dim_group(Family f, int n) {
  if (n < 0) throw PreconditionError("negative natural dimension");
  switch (f) {
    case Family::GL: return n * n;
    case Family::SL: return n == 0 ? 0 : n * n - 1;
    case Family::Sp:
      if (n % 2) throw PreconditionError("Sp needs an even natural dimension");
      return (n / 2) * (n + 1);
    case Family::SOOdd:
    case Family::SOEven: return n * (n - 1) / 2;
  }
  return 0;
}

GroupFamily GroupFamily::make(Family f, int n) {
  switch (f) {
    case Family::GL:
    case Family::SL:
      if (n < 2) throw PreconditionError("GL_n/SL_n needs n >= 2");
      break;
    case Family::Sp:
      if (n < 4 || n % 2) throw PreconditionError("Sp_n needs even n >= 4");
      break;
    case Family::SOOdd:
      if (n < 7 || n % 2 == 0) throw PreconditionError("SO_n (type B) needs odd n >= 7");
      break;
    case Family::SOEven:
      if (n < 8 || n % 2) throw PreconditionError("SO_n (type D) needs even n >= 8");
      break;
  }
  return GroupFamily{f, n};
}

int GroupFamily::rank() const {
  switch (family) {
    case Family::GL:
    case Family::SL: return natural_dim - 1;
    default: return natural_dim / 2;
  }
}

std::string GroupFamily::label() const {
  switch (family) {
    case Family::GL: return "GL_" + std::to_string(natural_dim);
    case Family::SL: return "SL_" + std::to_string(natural_dim);
    case Family::Sp: return "Sp_" + std::to_string(natural_dim);
    default: return "SO_" + std::to_string(natural_dim);
  }
}

int dim_group(const GroupFamily& g) { return g.dim(); }

int coxeter_number(const GroupFamily& g) {
  const int dim = (g.family == Family::GL) ? dim_group(Family::SL, g.natural_dim) : g.dim();
  const int r = g.rank();
  if (dim % r) throw CheckFailure("Coxeter number is not integral for " + g.label());
  return dim / r - 1;
}

bool admissible_jordan_type(Family f, const Partition& p) {
  for (const auto& [part, mult] : p.multiplicities()) {
    if (f == Family::Sp && part % 2 == 1 && mult % 2 == 1) return false;
    if ((f == Family::SOOdd || f == Family::SOEven) && part % 2 == 0 && mult % 2 == 1) return false;
  }
  return true;
}

std::vector<Partition> unipotent_jordan_types(Family f, int n) {
  if (n == 0) return {Partition{}};
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (admissible_jordan_type(f, p)) out.push_back(std::move(p));
  return out;
}

namespace {

// sum_i i m_i^2 + 2 sum_{i<j} i m_i m_j, written in multiplicities.
long gl_centralizer_sum(const Partition& p) {
  long total = 0;
  const auto& m = p.multiplicities();
  for (auto it = m.begin(); it != m.end(); ++it) {
    const long i = it->first, mi = it->second;
    total += i * mi * mi;
    for (auto jt = std::next(it); jt != m.end(); ++jt) total += 2 * i * mi * jt->second;
  }
  return total;
}

long odd_part_count(const Partition& p) {
  long total = 0;
  for (const auto& [part, mult] : p.multiplicities())
    if (part % 2) total += mult;
  return total;
}

}  // namespace

int dim_centralizer_unipotent(Family f, const Partition& p) {
  if (!admissible_jordan_type(f, p))
    throw PreconditionError("Jordan type " + p.to_string() + " violates the " + to_string(f) + " parity constraint");
  const long base = gl_centralizer_sum(p);
  long twice = 0;
  switch (f) {
    case Family::GL:
    case Family::SL: return static_cast<int>(base);
    case Family::Sp: twice = base + odd_part_count(p); break;
    case Family::SOOdd:
    case Family::SOEven: twice = base - odd_part_count(p); break;
  }
  if (twice % 2) throw CheckFailure("non-integral centralizer dimension for " + p.to_string());
  return static_cast<int>(twice / 2);
}

int dim_class(Family f, const Partition& p) {
  const int n = p.size();
  if (f == Family::SL) return dim_class(Family::GL, p);
  return dim_group(f, n) - dim_centralizer_unipotent(f, p);
}

LeviShape LeviShape::make(const GroupFamily& ambient, std::vector<int> gl_factors, int classical_factor) {
  for (int s : gl_factors)
    if (s < 1) throw PreconditionError("Levi GL factors must be positive");
  if (classical_factor < 0) throw PreconditionError("negative classical factor");
  const int gl_sum = std::accumulate(gl_factors.begin(), gl_factors.end(), 0);
  switch (ambient.family) {
    case Family::GL:
    case Family::SL:
      if (classical_factor != 0) throw PreconditionError("type A Levis have no classical factor");
      if (gl_sum != ambient.natural_dim) throw PreconditionError("GL factors must sum to n");
      break;
    case Family::Sp:
      if (classical_factor % 2) throw PreconditionError("Sp classical factor must be even");
      [[fallthrough]];
    default:
      if (2 * gl_sum + classical_factor != ambient.natural_dim)
        throw PreconditionError("2*sum(GL factors) + classical factor must equal the natural dimension");
      if (ambient.family == Family::SOOdd && classical_factor % 2 == 0)
        throw PreconditionError("type B classical factor must be odd");
      if (ambient.family == Family::SOEven && classical_factor % 2)
        throw PreconditionError("type D classical factor must be even");
  }
  return LeviShape{ambient, std::move(gl_factors), classical_factor};
}

Family LeviShape::classical_family() const { return ambient.family; }

int LeviShape::dim() const {
  int d = 0;
  for (int s : gl_factors) d += s * s;
  if (ambient.family == Family::SL) return d - 1;
  if (ambient.family != Family::GL) d += dim_group(classical_family(), classical_factor);
  return d;
}

bool LeviShape::is_torus() const {
  if (std::any_of(gl_factors.begin(), gl_factors.end(), [](int s) { return s > 1; })) return false;
  for (const auto& p : unipotent_jordan_types(classical_family(), classical_factor))
    if (!p.is_trivial()) return false;
  return true;
}

std::string LeviShape::label() const {
  std::ostringstream os;
  os << ambient.label() << " > ";
  for (std::size_t i = 0; i < gl_factors.size(); ++i) os << (i ? " x " : "") << "GL_" << gl_factors[i];
  if (ambient.family != Family::GL && ambient.family != Family::SL)
    os << (gl_factors.empty() ? "" : " x ") << (ambient.family == Family::Sp ? "Sp_" : "SO_") << classical_factor;
  return os.str();
}

bool JordanType::is_trivial() const {
  return std::all_of(gl_parts.begin(), gl_parts.end(), [](const Partition& p) { return p.is_trivial(); }) &&
         classical_part.is_trivial();
}

std::string JordanType::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < gl_parts.size(); ++i) os << (i ? " " : "") << gl_parts[i].to_string();
  if (!classical_part.empty()) os << " | " << classical_part.to_string();
  os << ']';
  return os.str();
}

void validate_jordan_type(const LeviShape& shape, const JordanType& j) {
  if (j.gl_parts.size() != shape.gl_factors.size()) throw PreconditionError("Jordan type has the wrong number of GL factors");
  for (std::size_t i = 0; i < j.gl_parts.size(); ++i)
    if (j.gl_parts[i].size() != shape.gl_factors[i]) throw PreconditionError("Jordan type does not partition its GL factor");
  if (j.classical_part.size() != shape.classical_factor)
    throw PreconditionError("Jordan type does not partition the classical factor");
  if (shape.classical_factor > 0 && !admissible_jordan_type(shape.classical_family(), j.classical_part))
    throw PreconditionError("classical factor Jordan type violates the parity constraint");
}

Partition ambient_jordan_type(const LeviShape& shape, const JordanType& j) {
  validate_jordan_type(shape, j);
  const bool type_a = shape.ambient.family == Family::GL || shape.ambient.family == Family::SL;
  std::map<int, int> m;
  for (const auto& p : j.gl_parts)
    for (const auto& [part, mult] : p.multiplicities()) m[part] += type_a ? mult : 2 * mult;
  for (const auto& [part, mult] : j.classical_part.multiplicities()) m[part] += mult;
  return Partition::from_multiplicities(m);
}

LeviClassDims dim_class_in_levi(const LeviShape& shape, const JordanType& j) {
  const Partition merged = ambient_jordan_type(shape, j);
  LeviClassDims out;
  for (const auto& p : j.gl_parts) out.in_levi += dim_class(Family::GL, p);
  if (shape.classical_factor > 0) out.in_levi += dim_class(shape.classical_family(), j.classical_part);
  out.in_group = dim_class(shape.ambient.family, merged);
  return out;
}

SupportBound support_upper_bound(const GroupFamily& g, const Partition& p) {
  if (p.size() != g.natural_dim) throw PreconditionError("Jordan type must partition the natural dimension");
  SupportBound out;
  out.support = g.natural_dim - p.length();
  const int s = out.support;
  if (g.family == Family::GL || g.family == Family::SL) {
    out.bound = s * (2 * g.natural_dim - s);
  } else {
    out.bound = s * (4 * g.rank() - s + 1) / 2;
  }
  return out;
}

}  // namespace liechar
