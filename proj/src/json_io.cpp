#include "lonesum/json_io.hpp"

namespace lonesum {

Json to_json(const Witness& w) {
  Json j;
  j["rows"] = w.rows;
  j["cols"] = w.cols;
  j["pattern"] = w.pattern;
  j["pattern_matrix"] = to_compact(forbidden_patterns().at(w.pattern));
  return j;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["order"] = d.order();
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    Json block;
    block["rows"] = b.rows;
    block["cols"] = b.cols;
    block["shape"] = b.shape;
    blocks.push_back(std::move(block));
  }
  j["blocks"] = std::move(blocks);
  j["zero_rows"] = d.zero_rows;
  j["zero_cols"] = d.zero_cols;
  return j;
}

Json classification_json(const BitMatrix& a, const Classification& c) {
  Json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["decomposable"] = c.is_decomposable();
  if (c.is_decomposable()) {
    j["order"] = c.order();
    j["lonesum"] = c.order() <= 1;
    j["ferrers"] = is_ferrers(a);
  } else {
    j["witness"] = to_json(*c.witness());
  }
  j["pair_class"] = std::string(to_string(pair_classify(a)));
  return j;
}

Json to_json(const OracleReport& r, bool include_timing) {
  Json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["total"] = r.total;
  j["decomposable"] = r.decomposable();
  j["lonesum"] = r.lonesum;
  j["tilde_lonesum"] = r.tilde_lonesum;
  j["d_by_order"] = r.d_by_order;
  j["tilde_d_by_order"] = r.tilde_d_by_order;
  if (include_timing) j["elapsed_seconds"] = r.elapsed.count();
  return j;
}

}  // namespace lonesum
