#include "output.hpp"

#include "polyalg/rational.hpp"

#include <stdexcept>

namespace polyalg::cli {

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"name", c.name},
               {"residual", c.residual},
               {"tolerance", c.tolerance},
               {"passed", c.passed}};
    if (!c.note.empty()) entry["note"] = c.note;
    checks.push_back(std::move(entry));
  }
  return json{{"subject", report.subject},
              {"passed", report.passed()},
              {"max_residual", report.max_residual()},
              {"checks", std::move(checks)}};
}

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return json{{"coefficients", std::move(coeffs)}, {"text", p.to_string()}};
}

json to_json(const Labels& labels) {
  json out = json::object();
  for (const auto& [k, v] : labels) out[k] = to_string(v);
  return out;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json out{{"rows", m.rows()}, {"cols", m.cols()}};
  if (m.rows() <= kDenseLimit && m.cols() <= kDenseLimit) {
    out["layout"] = "dense";
    json data = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      data.push_back(std::move(row));
    }
    out["data"] = std::move(data);
  } else {
    out["layout"] = "triplets";
    json data = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, j) != 0.0) data.push_back(json::array({i, j, m(i, j)}));
      }
    }
    out["data"] = std::move(data);
  }
  return out;
}

json rep_json(const LadderRep& rep, bool with_matrices) {
  json out{{"dim", rep.dim},
           {"truncated", rep.truncated},
           {"labels", to_json(rep.labels)},
           {"n0_start", to_string(rep.n0_start)},
           {"n0_diag", rep.n0_diag},
           {"raise_amps", rep.raise_amps},
           {"lower_amps", rep.lower_amps}};
  if (with_matrices) {
    out["matrices"] = json{{"n0", matrix_json(n0_matrix(rep))},
                           {"raise", matrix_json(raise_matrix(rep))},
                           {"lower", matrix_json(lower_matrix(rep))}};
  }
  return out;
}

LadderRep rep_from_json(const json& j) {
  try {
    LadderRep rep;
    rep.n0_start = parse_rational(j.at("n0_start").get<std::string>());
    rep.n0_diag = j.at("n0_diag").get<std::vector<double>>();
    rep.raise_amps = j.at("raise_amps").get<std::vector<double>>();
    rep.lower_amps = j.at("lower_amps").get<std::vector<double>>();
    rep.truncated = j.at("truncated").get<bool>();
    rep.dim = rep.n0_diag.size();
    if (j.contains("labels")) {
      for (const auto& [k, v] : j.at("labels").items()) {
        rep.labels[k] = parse_rational(v.get<std::string>());
      }
    }
    validate(rep);
    return rep;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed representation: ") + e.what());
  }
}

Polynomial polynomial_from_json(const json& j) {
  try {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Polynomial(std::move(coeffs));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial: ") + e.what());
  }
}

}  // namespace polyalg::cli
