#include "cyclemax/blowup.hpp"

#include <cmath>
#include <sstream>

namespace cyclemax {

namespace {

void check_blowup_args(int n, int k) {
  if (k < 2) fail(ErrorCode::too_few_vertices, "blowup needs k >= 2");
  if (n < 2 * k)
    fail(ErrorCode::too_few_vertices,
         "blowup on " + std::to_string(n) + " vertices needs n >= 2k = " + std::to_string(2 * k));
}

std::vector<int> balanced_sizes(int n, int k) {
  std::vector<int> sizes(static_cast<size_t>(k), (n - k) / k);
  for (int i = 0; i < (n - k) % k; ++i) ++sizes[static_cast<size_t>(i)];
  return sizes;
}

}  // namespace

BlowupConstruction build_blowup(int n, int k) {
  check_blowup_args(n, k);
  BlowupConstruction out;
  out.n = n;
  out.k = k;
  for (int i = 0; i < k; ++i) out.hubs.push_back(i);

  std::vector<int> sizes = balanced_sizes(n, k);
  std::vector<EdgeKey> edges;
  edges.reserve(static_cast<size_t>(2) * (n - k));
  int next_vertex = k;
  for (int i = 0; i < k; ++i) {
    std::vector<VertexId> cls;
    for (int j = 0; j < sizes[static_cast<size_t>(i)]; ++j) {
      VertexId v = next_vertex++;
      cls.push_back(v);
      edges.emplace_back(out.hubs[static_cast<size_t>(i)], v);
      edges.emplace_back(out.hubs[static_cast<size_t>((i + 1) % k)], v);
    }
    out.classes.push_back(std::move(cls));
  }
  out.graph = SimpleGraph(n, edges);
  return out;
}

long long closed_form_count(int n, int k) {
  check_blowup_args(n, k);
  std::vector<int> sizes = balanced_sizes(n, k);
  long long product = 1;
  for (int s : sizes) product *= s;
  return product;
}

double asymptotic_ratio(int n, int k) {
  double count = static_cast<double>(closed_form_count(n, k));
  double leading = std::pow(static_cast<double>(n) / k, k);
  return count / leading;
}

std::string embedding_description(const BlowupConstruction& b) {
  std::ostringstream os;
  os << "hubs " << b.hubs.front() << ".." << b.hubs.back()
     << " placed on a circle in index order;";
  for (size_t i = 0; i < b.classes.size(); ++i) {
    os << " class " << i + 1 << " (";
    for (size_t j = 0; j < b.classes[i].size(); ++j) {
      if (j) os << ",";
      os << b.classes[i][j];
    }
    os << ") drawn as a nested fan between hubs " << b.hubs[i] << " and "
       << b.hubs[(i + 1) % b.hubs.size()] << ";";
  }
  return os.str();
}

}  // namespace cyclemax
