#include "radio/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "radio/errors.hpp"

namespace radio {

RadioLabeling::RadioLabeling(std::shared_ptr<const ProductGraph> graph, std::vector<std::int64_t> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (!graph_) throw Error(ErrorCode::bad_index, "labeling needs a graph");
  if (static_cast<int>(labels_.size()) != graph_->order())
    throw Error(ErrorCode::bad_index, "labeling has " + std::to_string(labels_.size()) +
                                          " labels for " + std::to_string(graph_->order()) + " vertices");
}

std::int64_t RadioLabeling::span() const noexcept {
  if (labels_.empty()) return 0;
  auto [lo, hi] = std::minmax_element(labels_.begin(), labels_.end());
  return *hi - *lo;
}

RadioLabeling RadioLabeling::normalized() const {
  auto out = labels_;
  if (!out.empty()) {
    std::int64_t lo = *std::min_element(out.begin(), out.end());
    for (auto& f : out) f -= lo;
  }
  return RadioLabeling(graph_, std::move(out));
}

RadioLabeling greedy_label(const VertexOrdering& ord) {
  const auto& g = ord.graph();
  const std::int64_t d = g.diameter();
  std::vector<std::int64_t> f(g.order(), 0);
  std::int64_t cur = 0;
  for (int t = 0; t + 1 < ord.size(); ++t) {
    int a = ord[t], b = ord[t + 1];
    std::int64_t step = d + 1 - g.level(a) - g.level(b) - g.delta(a, b);
    if (step <= 0)
      throw Error(ErrorCode::negative_step, "increment " + std::to_string(step) + " at position " +
                                                std::to_string(t));
    cur += step;
    f[b] = cur;
  }
  return RadioLabeling(ord.graph_ptr(), std::move(f));
}

namespace {

void check_distinct(const RadioLabeling& lab) {
  std::vector<int> idx(lab.labels().size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return lab.label(a) < lab.label(b); });
  for (size_t i = 1; i < idx.size(); ++i) {
    if (lab.label(idx[i]) == lab.label(idx[i - 1])) {
      int u = std::min(idx[i], idx[i - 1]), v = std::max(idx[i], idx[i - 1]);
      throw Error(ErrorCode::duplicate_label, "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                                  " share label " + std::to_string(lab.label(u)));
    }
  }
}

void verify_rows(const RadioLabeling& lab, int begin, int end, std::vector<Violation>& out) {
  const auto& g = lab.graph();
  const int p = g.order(), d = g.diameter();
  for (int u = begin; u < end; ++u) {
    for (int v = u + 1; v < p; ++v) {
      std::int64_t gap = lab.label(u) - lab.label(v);
      if (gap < 0) gap = -gap;
      int need = d + 1 - g.distance(u, v);
      if (gap < need) out.push_back({u, v, gap, need});
    }
  }
}

}  // namespace

std::vector<Violation> verify(const RadioLabeling& lab, int jobs) {
  check_distinct(lab);
  const int p = lab.graph().order();
  jobs = std::clamp(jobs, 1, std::max(1, p));
  if (jobs == 1) {
    std::vector<Violation> out;
    verify_rows(lab, 0, p, out);
    return out;
  }
  // Contiguous row chunks of roughly equal pair counts; row u costs p - 1 - u checks.
  std::vector<int> cut{0};
  const double total = 0.5 * p * (p - 1.0);
  double acc = 0;
  for (int u = 0; u < p && static_cast<int>(cut.size()) < jobs; ++u) {
    acc += p - 1 - u;
    if (acc >= total * cut.size() / jobs) cut.push_back(u + 1);
  }
  cut.push_back(p);
  std::vector<std::vector<Violation>> parts(cut.size() - 1);
  std::vector<std::thread> workers;
  for (size_t k = 0; k + 1 < cut.size(); ++k)
    workers.emplace_back(verify_rows, std::cref(lab), cut[k], cut[k + 1], std::ref(parts[k]));
  for (auto& w : workers) w.join();
  std::vector<Violation> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

VertexOrdering ordering_from_labeling(const RadioLabeling& lab) {
  check_distinct(lab);
  std::vector<int> seq(lab.labels().size());
  std::iota(seq.begin(), seq.end(), 0);
  std::sort(seq.begin(), seq.end(), [&](int a, int b) { return lab.label(a) < lab.label(b); });
  return VertexOrdering(lab.graph_ptr(), std::move(seq));
}

}  // namespace radio
