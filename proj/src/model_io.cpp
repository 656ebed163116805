#include "fiedler/model_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fiedler {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kFormat = "fiedler-model";
constexpr int kVersion = 1;

Json kde_json(const KernelDensityEstimate& k) {
  return Json{{"bandwidth", k.bandwidth()}, {"points", k.points()}};
}

KernelDensityEstimate kde_from(const Json& j) {
  return KernelDensityEstimate(j.at("points").get<std::vector<double>>(), j.at("bandwidth").get<double>());
}

struct ToJson {
  Json& j;
  void operator()(const FrgModel& m) const {
    j["frg"] = {{"prior_edge", m.prior_edge}, {"positive", kde_json(m.kde_pos)}, {"negative", kde_json(m.kde_neg)}};
  }
  void operator()(const ErgModel& m) const {
    j["erg"] = {{"variant", m.variant == ErgVariant::markov ? "markov" : "higher_order"},
                {"kmax", m.kmax},
                {"rho", m.rho},
                {"theta", m.theta}};
  }
  void operator()(const CwsModel& m) const {
    j["cws"] = {{"delta", m.delta}, {"theta_beta", m.theta_beta}, {"beta", m.beta()}};
  }
  void operator()(const CbaModel& m) const { j["cba"] = {{"alpha", m.alpha}}; }
};

}  // namespace

std::string write_model(const ModelDocument& doc) {
  Json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["kind"] = to_string(kind_of(doc.model));
  j["sampling"] = {{"seed", doc.sampling.seed},
                   {"train_size", doc.sampling.train_size},
                   {"test_size", doc.sampling.test_size},
                   {"min_positives", doc.sampling.min_positives}};
  if (doc.sampling.stratify_fraction) j["sampling"]["stratify_fraction"] = *doc.sampling.stratify_fraction;
  j["train_positives"] = doc.train_positives;
  std::visit(ToJson{j}, doc.model);
  return j.dump(2) + "\n";
}

ModelDocument read_model(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("model document is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kFormat) throw std::runtime_error("not a fiedler model document");
    if (j.at("version").get<int>() != kVersion) throw std::runtime_error("unsupported model document version");

    ModelDocument doc;
    const auto& s = j.at("sampling");
    doc.sampling.seed = s.at("seed").get<std::uint64_t>();
    doc.sampling.train_size = s.at("train_size").get<std::size_t>();
    doc.sampling.test_size = s.at("test_size").get<std::size_t>();
    doc.sampling.min_positives = s.at("min_positives").get<std::size_t>();
    if (s.contains("stratify_fraction")) doc.sampling.stratify_fraction = s.at("stratify_fraction").get<double>();
    doc.train_positives = j.at("train_positives").get<std::size_t>();

    switch (parse_model_kind(j.at("kind").get<std::string>())) {
      case ModelKind::frg: {
        const auto& f = j.at("frg");
        FrgModel m;
        m.prior_edge = f.at("prior_edge").get<double>();
        m.kde_pos = kde_from(f.at("positive"));
        m.kde_neg = kde_from(f.at("negative"));
        doc.model = std::move(m);
        break;
      }
      case ModelKind::mrg:
      case ModelKind::hrg: {
        const auto& e = j.at("erg");
        ErgModel m;
        const auto variant = e.at("variant").get<std::string>();
        if (variant != "markov" && variant != "higher_order") throw std::runtime_error("unknown ERG variant " + variant);
        m.variant = variant == "markov" ? ErgVariant::markov : ErgVariant::higher_order;
        m.kmax = e.at("kmax").get<std::size_t>();
        m.rho = e.at("rho").get<double>();
        m.theta = e.at("theta").get<std::vector<double>>();
        if (m.theta.size() != erg_parameter_count(m.variant, m.kmax)) {
          throw std::runtime_error("ERG parameter vector has the wrong length");
        }
        doc.model = std::move(m);
        break;
      }
      case ModelKind::cws: {
        const auto& c = j.at("cws");
        doc.model = CwsModel{c.at("delta").get<std::size_t>(), c.at("theta_beta").get<double>()};
        break;
      }
      case ModelKind::cba:
        doc.model = CbaModel{j.at("cba").at("alpha").get<double>()};
        break;
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed model document: ") + e.what());
  }
}

void save_model(const std::filesystem::path& path, const ModelDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file '" + path.string() + "'");
  out << write_model(doc);
  if (!out) throw std::runtime_error("failed writing model file '" + path.string() + "'");
}

ModelDocument load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_model(buf.str());
}

}  // namespace fiedler
