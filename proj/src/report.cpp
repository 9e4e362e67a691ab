#include "altlab/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace altlab {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int t = 0; t < len; ++t) {
    std::snprintf(buf, sizeof buf, "%02x", digest[t]);
    hex += buf;
  }
  return hex;
}

Json to_json(BiDegree bd) { return Json::array({bd.dx, bd.dy}); }

Json table_to_json(const std::map<BiDegree, std::size_t>& table, BiDegree cutoff) {
  Json rows = Json::array();
  for (int a = 0; a <= cutoff.dx; ++a) {
    Json row = Json::array();
    for (int b = 0; b <= cutoff.dy; ++b) {
      auto it = table.find({a, b});
      row.push_back(it == table.end() ? Json(nullptr) : Json(it->second));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table_to_csv(const std::map<BiDegree, std::size_t>& table, BiDegree cutoff) {
  std::string out = "a\\b";
  for (int b = 0; b <= cutoff.dy; ++b) out += "," + std::to_string(b);
  out += "\n";
  for (int a = 0; a <= cutoff.dx; ++a) {
    out += std::to_string(a);
    for (int b = 0; b <= cutoff.dy; ++b) {
      auto it = table.find({a, b});
      out += "," + (it == table.end() ? std::string() : std::to_string(it->second));
    }
    out += "\n";
  }
  return out;
}

namespace {

template <class Derived>
Json matrix_to_json(const Eigen::MatrixBase<Derived>& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<Rational> matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
    throw UsageError("MPoint JSON: matrix has wrong shape");
  Matrix<Rational> m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw UsageError("MPoint JSON: matrix has wrong shape");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = ScalarTraits<Rational>::parse(row[static_cast<std::size_t>(c)].get<std::string>());
  }
  return m;
}

}  // namespace

Json mpoint_to_json(const MPoint<Rational>& p) {
  Json j;
  j["n"] = p.n();
  j["X"] = matrix_to_json(p.X());
  j["Y"] = matrix_to_json(p.Y());
  Json i = Json::array(), jr = Json::array();
  for (Eigen::Index t = 0; t < p.n(); ++t) {
    i.push_back(p.i()(t).str());
    jr.push_back(p.j()(t).str());
  }
  j["i"] = std::move(i);
  j["j"] = std::move(jr);
  j["on_variety"] = p.on_variety();
  return j;
}

MPoint<Rational> mpoint_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1) throw UsageError("MPoint JSON: n must be >= 1");
    Matrix<Rational> x = matrix_from_json(j.at("X"), n, n);
    Matrix<Rational> y = matrix_from_json(j.at("Y"), n, n);
    Matrix<Rational> i = matrix_from_json(Json::array({j.at("i")}), 1, n);
    Matrix<Rational> jr = matrix_from_json(Json::array({j.at("j")}), 1, n);
    return MPoint<Rational>(x, y, Vector<Rational>(i.transpose()), RowVector<Rational>(jr));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("MPoint JSON: ") + e.what());
  }
}

Json to_json(const FreenessReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["cutoff"] = to_json(rep.cutoff);
  j["module"] = rep.module;
  j["hilbert"] = table_to_json(rep.hilbert, rep.cutoff);
  Json kernels = Json::array();
  for (const auto& [key, dim] : rep.kernel_dims)
    kernels.push_back({{"stage", key.first}, {"bidegree", to_json(key.second)}, {"dim", dim}});
  j["kernel_dims"] = std::move(kernels);
  Json stages = Json::object();
  for (int d = 1; d <= rep.n; ++d) {
    std::map<BiDegree, std::size_t> t;
    for (const auto& [key, dim] : rep.stage_dims)
      if (key.first == d) t[key.second] = dim;
    stages[std::to_string(d)] = table_to_json(t, rep.cutoff);
  }
  j["stage_dims"] = std::move(stages);
  j["fiber_series"] = table_to_json(rep.fiber_series, rep.cutoff);
  j["checks"] = {
      {"regular_sequence", rep.kernels_ok ? "pass" : "fail"},
      {"euler_identity", rep.euler_identity_ok ? "pass" : "fail"},
      {"fiber_nonnegative", rep.fiber_nonnegative},
      {"free_basis_certificate", rep.certificate_ok ? "pass" : "fail"},
      {"criteria_agree", rep.kernels_ok == rep.euler_identity_ok},
  };
  Json gens = Json::array();
  for (const auto& [bd, text] : rep.generators) gens.push_back({{"bidegree", to_json(bd)}, {"element", text}});
  j["certificate"] = {
      {"independent", rep.independent_ok},
      {"spanning", rep.spanning_ok},
      {"generator_counts", table_to_json(rep.generator_counts, rep.cutoff)},
      {"generators", std::move(gens)},
  };
  j["failures"] = rep.failures;
  j["verdict"] = verdict_name(rep.verdict);
  j["scope"] =
      "free up to the cutoff window; flatness of the spectrum map is not recomputed, the module itself is "
      "certified directly";
  return j;
}

Json to_json(const SurjectivityReport& rep) {
  return {{"n", rep.n},
          {"k", rep.k},
          {"bidegree", to_json(rep.bidegree)},
          {"candidates", rep.candidates},
          {"span_dim", rep.span_dim},
          {"target_dim", rep.target_dim},
          {"contained", rep.contained},
          {"verdict", rep.pass ? "pass" : "fail"}};
}

Json to_json(const InjectivityReport& rep) {
  return {{"n", rep.n},
          {"k", rep.k},
          {"bidegree", to_json(rep.bidegree)},
          {"candidates", rep.candidates},
          {"points", rep.points},
          {"eval_rank", rep.eval_rank},
          {"image_rank", rep.image_rank},
          {"twist_consistent", rep.twist_consistent},
          {"verdict", verdict_name(rep.verdict)}};
}

Json to_json(const K0Report& rep) {
  return {{"n", rep.n},
          {"bidegree", to_json(rep.bidegree)},
          {"words", rep.words},
          {"span_dim", rep.span_dim},
          {"target_dim", rep.target_dim},
          {"traces_consistent", rep.traces_consistent},
          {"contained", rep.contained},
          {"verdict", rep.pass ? "pass" : "fail"}};
}

Json ReportEnvelope::to_json() const {
  Json j;
  j["schema"] = kSchema;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["command_line"] = command_line;
  j["config"] = config;
  j["verdict"] = verdict;
  j["body"] = body;
  Json hashes = Json::object();
  hashes["body"] = sha256_hex(body.dump());
  for (const auto& [name, h] : table_hashes) hashes[name] = h;
  j["hashes"] = std::move(hashes);
  j["wall_clock_ms"] = wall_clock_ms;
  return j;
}

}  // namespace altlab
