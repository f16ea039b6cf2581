#include "liealg/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liealg/branching.hpp"
#include "liealg/fusion.hpp"
#include "liealg/verify.hpp"

namespace liealg::cli {

namespace {

using nlohmann::json;

json number(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

json weight_json(const Weight& w) { return std::vector<int>(w.labels().begin(), w.labels().end()); }

json rep_sum_json(const RepSum& sum) {
  json out = json::array();
  for (const auto& [w, m] : sum) out.push_back({{"weight", weight_json(w)}, {"multiplicity", number(m)}});
  return out;
}

void print_rep_sum(std::ostream& out, const RepSum& sum) {
  for (const auto& [w, m] : sum) out << w << " " << m << "\n";
}

std::vector<Weight> parse_weights(const std::vector<std::string>& texts) {
  std::vector<Weight> out;
  for (const auto& t : texts) out.push_back(Weight::parse(t));
  return out;
}

std::string read_request(const std::string& request) {
  if (request == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  if (request.starts_with("@")) {
    std::ifstream in(request.substr(1));
    if (!in) throw PreconditionError("cannot read " + request.substr(1));
    return {std::istreambuf_iterator<char>(in), {}};
  }
  return request;
}

struct BlocksRequest {
  LieType type;
  int level;
  CurveData curve;
};

BlocksRequest parse_blocks_request(const std::string& text) {
  try {
    json j = json::parse(text);
    LieType type = LieType::parse(j.at("type").get<std::string>());
    CurveData curve{j.value("genus", 0), {}};
    for (const auto& label : j.value("labels", json::array())) curve.labels.emplace_back(label.get<std::vector<int>>());
    return {type, j.at("level").get<int>(), std::move(curve)};
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed blocks request: ") + e.what());
  }
}

struct Options {
  bool as_json = false;
  std::optional<std::size_t> cache_limit;
  std::string type;
  std::vector<std::string> weights;
  int level = 0;
  int genus = 0;
  std::string request;
  std::string to;
  std::string embedding;
  std::string fault;
};

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

int dispatch(const CLI::App& app, const Options& o, std::ostream& out) {
  auto algebra = [&] { return Algebra::standard(LieType::parse(o.type)); };
  const auto* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();

  if (name == "dim" || name == "index") {
    auto a = algebra();
    Weight w = Weight::parse(o.weights.at(0));
    Integer value = name == "dim" ? a->dim(w) : a->dynkin_index(w);
    if (o.as_json) emit(out, {{name, number(value)}});
    else out << value << "\n";
    return 0;
  }
  if (name == "alcove") {
    auto ring = FusionRing::standard(LieType::parse(o.type), o.level);
    if (o.as_json) {
      json list = json::array();
      for (const auto& w : ring->alcove()) list.push_back(weight_json(w));
      emit(out, {{"alcove", list}});
    } else {
      for (const auto& w : ring->alcove()) out << w << "\n";
    }
    return 0;
  }
  if (name == "tensor") {
    auto ws = parse_weights(o.weights);
    RepSum sum = tensor_decompose(*algebra(), ws[0], ws[1]);
    if (o.as_json) emit(out, {{"decomposition", rep_sum_json(sum)}});
    else print_rep_sum(out, sum);
    return 0;
  }
  if (name == "fuse") {
    auto ring = FusionRing::standard(LieType::parse(o.type), o.level);
    auto ws = parse_weights(o.weights);
    if (ws.size() == 3) {
      Integer n = ring->coefficient(ws[0], ws[1], ws[2]);
      if (o.as_json) emit(out, {{"coefficient", number(n)}});
      else out << n << "\n";
      return 0;
    }
    auto product = ring->product(ws[0], ws[1]);
    RepSum sum;
    for (std::size_t k = 0; k < product.size(); ++k) {
      if (product[k] != 0) sum[ring->alcove()[k]] = Integer(static_cast<long>(product[k]));
    }
    if (o.as_json) emit(out, {{"fusion", rep_sum_json(sum)}});
    else print_rep_sum(out, sum);
    return 0;
  }
  if (name == "blocks") {
    if (o.request.empty() && o.type.empty()) throw PreconditionError("blocks needs a type or --request");
    BlocksRequest req = o.request.empty()
                            ? BlocksRequest{LieType::parse(o.type), o.level, {o.genus, parse_weights(o.weights)}}
                            : parse_blocks_request(read_request(o.request));
    Integer d = FusionRing::standard(req.type, req.level)->blocks_dim(req.curve);
    if (o.as_json) emit(out, {{"dim", number(d)}});
    else out << d << "\n";
    return 0;
  }
  if (name == "branch") {
    if (o.to.empty() && o.embedding.empty()) throw PreconditionError("branch needs --to or --embedding");
    Embedding emb = [&] {
      if (!o.embedding.empty()) return load_embedding(o.embedding);
      auto found = builtin_chain(LieType::parse(o.type), LieType::parse(o.to));
      if (!found) throw PreconditionError("no built-in embedding " + o.to + "<" + o.type);
      return *found;
    }();
    if (emb.ambient != LieType::parse(o.type)) throw PreconditionError("embedding ambient is " + emb.ambient.name());
    RepSum sum = branch(emb, Weight::parse(o.weights.at(0)));
    auto sub = Algebra::standard(emb.sub);
    Integer index = sub->index_of_sum(sum), dim = sub->dim_of_sum(sum);
    if (o.as_json) {
      emit(out, {{"embedding", emb.name()}, {"branching", rep_sum_json(sum)},
                 {"index", number(index)}, {"dim", number(dim)}});
    } else {
      out << "embedding " << emb.name() << "\n";
      print_rep_sum(out, sum);
      out << "index " << index << "\ndim " << dim << "\n";
    }
    return 0;
  }
  // verify-paper
  verify::Environment env = verify::Environment::standard();
  if (o.fault == "f4-form") env = verify::faulty(verify::Fault::PerturbedF4Form);
  else if (o.fault == "d4-zero") env = verify::faulty(verify::Fault::ZeroD4Projection);
  verify::Report report = verify::verify_paper(env);
  if (o.as_json) {
    json claims = json::array();
    for (const auto& r : report.results) {
      claims.push_back({{"id", r.id}, {"source", r.source}, {"expected", r.expected},
                        {"computed", r.computed}, {"pass", r.pass}});
    }
    emit(out, {{"claims", claims}, {"passed", report.passed()}, {"total", report.results.size()}});
  } else {
    for (const auto& r : report.results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.id << "  expected " << r.expected << "  computed "
          << r.computed << "  [" << r.source << "] " << std::fixed << std::setprecision(3) << r.seconds << "s\n";
    }
    out << report.passed() << "/" << report.results.size() << " claims pass\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for simple Lie algebras and their fusion rings", "liealg"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "Print JSON instead of text");
  app.add_option("--fusion-cache-limit", o.cache_limit, "Largest fusion table (entries) kept in memory");

  auto type_arg = [&](CLI::App* c) { c->add_option("type", o.type, "Lie type, e.g. E8")->required(); };
  // One string per positional: a vector option would let CLI11 split "[0,1]" into two values.
  std::array<std::string, 3> weight_text;
  auto weight_args = [&](CLI::App* c, std::size_t lo, std::size_t hi) {
    for (std::size_t i = 0; i < hi; ++i) {
      auto* opt = c->add_option("weight" + std::to_string(i + 1), weight_text[i], "Weight in Dynkin labels, e.g. [0,1]");
      if (i < lo) opt->required();
    }
  };

  auto* dim = app.add_subcommand("dim", "Dimension of an irreducible module");
  type_arg(dim);
  weight_args(dim, 1, 1);
  auto* index = app.add_subcommand("index", "Dynkin index of an irreducible module");
  type_arg(index);
  weight_args(index, 1, 1);
  auto* alcove_cmd = app.add_subcommand("alcove", "Dominant weights of level at most l");
  type_arg(alcove_cmd);
  alcove_cmd->add_option("--level", o.level)->required();
  auto* tensor = app.add_subcommand("tensor", "Decompose a tensor product");
  type_arg(tensor);
  weight_args(tensor, 2, 2);
  auto* fuse = app.add_subcommand("fuse", "Fusion product, or one coefficient when three weights are given");
  type_arg(fuse);
  weight_args(fuse, 2, 3);
  fuse->add_option("--level", o.level)->required();
  auto* blocks = app.add_subcommand("blocks", "Dimension of conformal blocks on a marked curve");
  blocks->add_option("type", o.type, "Lie type");
  blocks->allow_extras();
  blocks->add_option("--level", o.level);
  blocks->add_option("--genus", o.genus);
  auto* request = blocks->add_option("--request", o.request, "JSON request: inline, @file or - for stdin");
  blocks->get_option("--level")->excludes(request);
  blocks->get_option("--genus")->excludes(request);
  auto* branch_cmd = app.add_subcommand("branch", "Restrict a module to a subalgebra");
  type_arg(branch_cmd);
  weight_args(branch_cmd, 1, 1);
  auto* to = branch_cmd->add_option("--to", o.to, "Subalgebra reached through the built-in tower");
  auto* file = branch_cmd->add_option("--embedding", o.embedding, "Embedding description file");
  to->excludes(file);
  auto* verify_cmd = app.add_subcommand("verify-paper", "Check every stored claim");
  verify_cmd->add_option("--fault", o.fault, "Run against damaged data")
      ->check(CLI::IsMember({"f4-form", "d4-zero"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n" << app.help();
    return 2;
  }

  for (const auto& t : weight_text) {
    if (!t.empty()) o.weights.push_back(t);
  }
  if (blocks->parsed()) o.weights = blocks->remaining();

  try {
    if (o.cache_limit) FusionRing::set_table_limit(*o.cache_limit);
    return dispatch(app, o, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace liealg::cli
