#include "cartsym/young.hpp"

#include <cmath>
#include <sstream>

namespace cartsym {

int Partition::sum() const {
  int total = 0;
  for (int p : parts) total += p;
  return total;
}

bool Partition::valid() const {
  if (parts.empty()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts.size(); ++i)
    os << (i ? "," : "") << parts[i];
  os << ']';
  return os.str();
}

Partition parse_partition(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') body.erase(body.begin());
  if (!body.empty() && body.back() == ']') body.pop_back();
  Partition shape;
  std::istringstream is(body);
  std::string token;
  while (std::getline(is, token, ',')) {
    std::size_t pos = 0;
    int part;
    try {
      part = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw InputError("cannot parse partition part '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size())
      throw InputError("cannot parse partition part '" + token + "'");
    shape.parts.push_back(part);
  }
  if (!shape.valid())
    throw InputError("'" + text + "' is not a weakly decreasing partition");
  return shape;
}

namespace {

void fill_tableaux(const Partition& shape, int value, std::vector<int>& fill,
                   Tableau& current, std::vector<Tableau>& out) {
  const int m = shape.sum();
  if (value > m) {
    out.push_back(current);
    return;
  }
  for (std::size_t row = 0; row < shape.parts.size(); ++row) {
    const int col = fill[row];
    if (col >= shape.parts[row]) continue;
    // Column-strictness: the cell above must already be filled.
    if (row > 0 && fill[row - 1] <= col) continue;
    fill[row] = col + 1;
    current.row_of[value - 1] = static_cast<int>(row);
    current.col_of[value - 1] = col;
    fill_tableaux(shape, value + 1, fill, current, out);
    fill[row] = col;
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  if (!shape.valid()) throw InputError("invalid partition shape");
  const int m = shape.sum();
  std::vector<Tableau> out;
  std::vector<int> fill(shape.parts.size(), 0);
  Tableau current;
  current.row_of.assign(m, 0);
  current.col_of.assign(m, 0);
  fill_tableaux(shape, 1, fill, current, out);
  return out;
}

std::uint64_t hook_length_count(const Partition& shape) {
  const int m = shape.sum();
  std::vector<int> conjugate;  // column lengths
  for (int col = 0;; ++col) {
    int len = 0;
    for (int part : shape.parts)
      if (part > col) ++len;
    if (len == 0) break;
    conjugate.push_back(len);
  }
  // Compute m! / prod(hooks) with interleaved division to stay in range.
  std::uint64_t numerator = 1, denominator = 1;
  for (int t = 2; t <= m; ++t) numerator *= static_cast<std::uint64_t>(t);
  for (std::size_t row = 0; row < shape.parts.size(); ++row)
    for (int col = 0; col < shape.parts[row]; ++col) {
      const int arm = shape.parts[row] - col - 1;
      const int leg = conjugate[col] - static_cast<int>(row) - 1;
      denominator *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  return numerator / denominator;
}

RealMatrix yor_transposition(const std::vector<Tableau>& tableaux, int k) {
  const int dim = static_cast<int>(tableaux.size());
  RealMatrix out = RealMatrix::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    const Tableau& t = tableaux[a];
    const int d = t.axial_distance(k, k + 1);
    out(a, a) = 1.0 / d;
    if (std::abs(d) == 1) continue;  // k, k+1 share a row or column
    // The swapped tableau is standard exactly when |d| > 1; find its index.
    Tableau swapped = t;
    std::swap(swapped.row_of[k - 1], swapped.row_of[k]);
    std::swap(swapped.col_of[k - 1], swapped.col_of[k]);
    for (int b = 0; b < dim; ++b) {
      if (tableaux[b].row_of == swapped.row_of &&
          tableaux[b].col_of == swapped.col_of) {
        out(b, a) = std::sqrt(1.0 - 1.0 / (static_cast<double>(d) * d));
        break;
      }
    }
  }
  return out;
}

RealMatrix yor_matrix(const std::vector<Tableau>& tableaux,
                      const Permutation& sigma) {
  const int dim = static_cast<int>(tableaux.size());
  // Bubble-sort the image sequence; each position swap t multiplies sigma on
  // the right by (t, t+1), so sigma equals the recorded swaps composed in
  // reverse order.
  std::vector<int> images = sigma.images();
  std::vector<int> swaps;
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t t = 0; t + 1 < images.size(); ++t) {
      if (images[t] > images[t + 1]) {
        std::swap(images[t], images[t + 1]);
        swaps.push_back(static_cast<int>(t) + 1);
        dirty = true;
      }
    }
  }
  RealMatrix out = RealMatrix::Identity(dim, dim);
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
    out = out * yor_transposition(tableaux, *it);
  return out;
}

}  // namespace cartsym
