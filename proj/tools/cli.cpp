#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ktcp/chern.hpp"
#include "ktcp/exactalg.hpp"
#include "ktcp/grothendieck.hpp"
#include "ktcp/homalg.hpp"
#include "ktcp/ktheory.hpp"
#include "ktcp/truncring.hpp"

namespace ktcp::cli {

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BigInt parse_integer(const std::string& text) {
  BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0) throw Error("not an integer: \"" + text + "\"");
  return v;
}

std::vector<BigInt> parse_integer_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(parse_integer(item));
  }
  if (out.empty()) throw Error("empty coefficient list");
  return out;
}

homalg::ChainComplex complex_for(const ktheory::Space& s) {
  switch (s.kind) {
    case ktheory::Space::Kind::Point: return homalg::cpn_complex(0);
    case ktheory::Space::Kind::CPn: return homalg::cpn_complex(s.parameter);
    case ktheory::Space::Kind::Sphere: return homalg::sphere_complex(s.parameter);
  }
  throw Error("unknown space");
}

json matrix_json(const exactalg::IntegerMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

OutputDocument cmd_cohomology(const std::string& space_text, std::optional<int> degree) {
  const auto space = ktheory::parse_space(space_text);
  const auto c = complex_for(space);
  OutputDocument doc{"cohomology", {{"space", space.to_string()}}, {}};
  if (degree) doc.inputs["degree"] = *degree;
  json groups = json::array();
  const int lo = degree ? *degree : 0, hi = degree ? *degree : static_cast<int>(c.top());
  for (int k = lo; k <= hi; ++k) groups.push_back({{"degree", k}, {"group", homalg::cohomology(c, k).to_string()}});
  doc.result = {{"groups", groups}};
  return doc;
}

OutputDocument cmd_kgroups(const std::string& space_text, long q) {
  const auto space = ktheory::parse_space(space_text);
  return {"kgroups", {{"space", space.to_string()}, {"q", q}}, {{"group", ktheory::k_groups(space, q).to_string()}}};
}

OutputDocument cmd_ring(std::size_t n) {
  json basis = json::array(), table = json::array();
  for (std::size_t i = 0; i <= n; ++i) {
    basis.push_back(ktheory::KClass::gamma_power(n, i).to_string());
    json row = json::array();
    for (std::size_t j = 0; j <= n; ++j)
      row.push_back((ktheory::KClass::gamma_power(n, i) * ktheory::KClass::gamma_power(n, j)).to_string());
    table.push_back(std::move(row));
  }
  return {"ring",
          {{"n", n}},
          {{"ring", "Z[γ]/(γ^" + std::to_string(n + 1) + ")"},
           {"group", ktheory::k_groups(ktheory::Space::cpn(n), 0).to_string()},
           {"basis", basis},
           {"table", table}}};
}

OutputDocument cmd_ch_class(const std::string& space_text, const std::string& coeffs) {
  const auto space = ktheory::parse_space(space_text);
  if (space.kind != ktheory::Space::Kind::CPn) throw Error("ch --class needs a space cpn:N");
  const ktheory::KClass a(space.parameter, parse_integer_list(coeffs));
  return {"ch",
          {{"space", space.to_string()}, {"class", a.to_string()}},
          {{"polynomial", ktheory::chern_character_map(a).to_string()}}};
}

OutputDocument cmd_ch_bundle(std::size_t rank, const std::string& chern, std::size_t order) {
  const chern::FormalBundle b(rank, truncring::parse_trunc_poly(chern, order));
  return {"ch",
          {{"rank", rank}, {"chern", b.total_chern().to_string()}, {"order", order}},
          {{"polynomial", chern::chern_character(b).to_string()}}};
}

OutputDocument cmd_trace(std::size_t n) {
  return {"trace", {{"n", n}}, ktheory::to_json(ktheory::replay_induction(n))};
}

OutputDocument cmd_newton(std::size_t k) {
  return {"newton", {{"k", k}}, {{"polynomial", chern::newton_s(k).to_string()}}};
}

OutputDocument cmd_groth(const std::string& path) {
  const auto s = grothendieck::parse_cayley_table(read_input(path));
  const auto g = grothendieck::completion(s);
  return {"groth", {{"table", path}, {"size", s.size()}}, {{"group", g.carrier().to_string()}}};
}

OutputDocument cmd_bott_check() {
  return {"bott-check", json::object(),
          {{"matrix", matrix_json(ktheory::bott_matrix())}, {"isomorphism", ktheory::bott_check()}}};
}

OutputDocument cmd_snf(const std::string& path) {
  const auto m = exactalg::parse_matrix(read_input(path));
  const auto sf = exactalg::smith_normal_form(m);
  json d = json::array();
  for (const auto& x : sf.d) d.push_back(x.get_str());
  return {"snf",
          {{"matrix", path}, {"rows", m.rows()}, {"cols", m.cols()}},
          {{"invariant_factors", d},
           {"rank", sf.rank()},
           {"cokernel", exactalg::cokernel(m).to_string()},
           {"u", matrix_json(sf.u)},
           {"v", matrix_json(sf.v)}}};
}

std::string render_matrix(const json& rows) {
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (const auto& x : row) line += (line.empty() ? "" : " ") + x.get<std::string>();
    out += "  " + line + "\n";
  }
  return out;
}

}  // namespace

json to_json(const OutputDocument& doc) {
  return {{"format_version", doc.format_version},
          {"command", doc.command},
          {"inputs", doc.inputs},
          {"result", doc.result}};
}

OutputDocument parse_output_document(std::string_view text) {
  try {
    const json j = json::parse(text);
    OutputDocument doc;
    doc.format_version = j.at("format_version").get<int>();
    if (doc.format_version != kFormatVersion)
      throw Error("unsupported output format version " + std::to_string(doc.format_version));
    doc.command = j.at("command").get<std::string>();
    doc.inputs = j.at("inputs");
    doc.result = j.at("result");
    return doc;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed output document: ") + e.what());
  }
}

std::string render_human(const OutputDocument& doc) {
  const json& r = doc.result;
  std::ostringstream out;
  if (doc.command == "cohomology") {
    for (const auto& g : r.at("groups"))
      out << "H^" << g.at("degree").get<int>() << " = " << g.at("group").get<std::string>() << "\n";
  } else if (doc.command == "kgroups") {
    out << "K^" << doc.inputs.at("q").get<long>() << "(" << doc.inputs.at("space").get<std::string>()
        << ") = " << r.at("group").get<std::string>() << "\n";
  } else if (doc.command == "ring") {
    out << "K(CP^" << doc.inputs.at("n").get<std::size_t>() << ") = " << r.at("ring").get<std::string>()
        << ", additively " << r.at("group").get<std::string>() << "\n";
    out << "basis:";
    for (const auto& b : r.at("basis")) out << " " << b.get<std::string>();
    out << "\n";
    const auto& basis = r.at("basis");
    const auto& table = r.at("table");
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = i; j < table[i].size(); ++j)
        out << "(" << basis[i].get<std::string>() << ")·(" << basis[j].get<std::string>()
            << ") = " << table[i][j].get<std::string>() << "\n";
  } else if (doc.command == "ch" || doc.command == "newton") {
    out << r.at("polynomial").get<std::string>() << "\n";
  } else if (doc.command == "trace") {
    for (const auto& s : r.at("steps")) {
      out << s.at("label").get<std::string>() << " = " << s.at("conclusion").get<std::string>() << "  ["
          << s.at("rule").get<std::string>() << "]\n";
      std::string window;
      for (const auto& w : s.at("window"))
        window += (window.empty() ? "" : " -> ") + w.at("name").get<std::string>() + " = " +
                  w.at("group").get<std::string>() + (w.at("source") == "axiom" ? " (axiom)" : "");
      out << "  " << window << "\n";
      if (!s.at("exact").empty()) {
        out << "  exact at 1..3:";
        for (const auto& e : s.at("exact")) out << (e.get<bool>() ? " yes" : " no");
        out << "; five lemma: " << (s.at("five_lemma").get<bool>() ? "verified" : "failed") << "\n";
      }
    }
    out << "K^0(CP^" << r.at("n").get<std::size_t>() << ") = " << r.at("k0").get<std::string>() << "\n";
    out << "K^1(CP^" << r.at("n").get<std::size_t>() << ") = " << r.at("k1").get<std::string>() << "\n";
  } else if (doc.command == "groth") {
    out << r.at("group").get<std::string>() << "\n";
  } else if (doc.command == "bott-check") {
    out << "Bott map Z^2 -> K(S^2) in basis (1, γ):\n" << render_matrix(r.at("matrix"));
    out << (r.at("isomorphism").get<bool>() ? "isomorphism: yes" : "isomorphism: no") << "\n";
  } else if (doc.command == "snf") {
    out << "invariant factors:";
    for (const auto& d : r.at("invariant_factors")) out << " " << d.get<std::string>();
    out << "\nrank: " << r.at("rank").get<std::size_t>() << "\n";
    out << "cokernel: " << r.at("cokernel").get<std::string>() << "\n";
  } else {
    out << r.dump(2) << "\n";
  }
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact K-theory and cohomology of projective spaces", "ktcp"};
  app.set_version_flag("--version", "ktcp " + std::string(kVersion) + " (output format " +
                                        std::to_string(kFormatVersion) + ")");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  bool as_json = false;
  app.add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--json", as_json, "same as --format machine");

  const CLI::Validator space_spec(
      [](std::string& text) {
        try {
          ktheory::parse_space(text);
          return std::string();
        } catch (const Error& e) {
          return std::string(e.what());
        }
      },
      "SPACE");

  std::optional<OutputDocument> doc;
  std::function<OutputDocument()> action;

  std::string space_text;
  std::optional<int> degree;
  auto* coh = app.add_subcommand("cohomology", "cohomology groups H^k");
  coh->add_option("space", space_text, "cpn:N, sphere:M or point")->required()->check(space_spec);
  coh->add_option("--degree", degree, "single degree");
  coh->callback([&] { action = [&] { return cmd_cohomology(space_text, degree); }; });

  long q = 0;
  auto* kg = app.add_subcommand("kgroups", "K-groups K^q");
  kg->add_option("space", space_text, "cpn:N, sphere:M or point")->required()->check(space_spec);
  kg->add_option("--q", q, "degree q");
  kg->callback([&] { action = [&] { return cmd_kgroups(space_text, q); }; });

  std::size_t n = 0;
  auto* ring = app.add_subcommand("ring", "the ring K(CP^n)");
  ring->add_option("n", n, "dimension n")->required();
  ring->callback([&] { action = [&] { return cmd_ring(n); }; });

  std::string class_text, chern_text;
  std::optional<std::size_t> rank, order;
  std::string ch_space;
  auto* ch = app.add_subcommand("ch", "Chern character of a K-class or a formal bundle");
  ch->add_option("space", ch_space, "cpn:N (with --class)")->check(space_spec);
  auto* class_opt = ch->add_option("--class", class_text, "coefficients a0,a1,...,an in the γ basis");
  auto* rank_opt = ch->add_option("--rank", rank, "bundle rank");
  auto* chern_opt = ch->add_option("--chern", chern_text, "total Chern class, e.g. 1+2x+x^2");
  auto* order_opt = ch->add_option("--order", order, "truncation order");
  class_opt->excludes(rank_opt)->excludes(chern_opt)->excludes(order_opt);
  rank_opt->needs(chern_opt)->needs(order_opt);
  chern_opt->needs(rank_opt);
  ch->callback([&] {
    if (!class_text.empty()) {
      if (ch_space.empty()) throw CLI::ValidationError("ch", "--class needs a space argument");
      action = [&] { return cmd_ch_class(ch_space, class_text); };
    } else if (rank) {
      if (!ch_space.empty()) throw CLI::ExtrasError({ch_space});
      action = [&] { return cmd_ch_bundle(*rank, chern_text, *order); };
    } else {
      throw CLI::ValidationError("ch", "needs either --class or --rank/--chern/--order");
    }
  });

  auto* trace = app.add_subcommand("trace", "replay of the induction for CP^n");
  trace->add_option("n", n, "dimension n >= 1")->required();
  trace->callback([&] { action = [&] { return cmd_trace(n); }; });

  std::size_t k = 0;
  auto* newton = app.add_subcommand("newton", "Newton polynomial s_k");
  newton->add_option("--k", k, "index k >= 1")->required();
  newton->callback([&] { action = [&] { return cmd_newton(k); }; });

  std::string path;
  auto* groth = app.add_subcommand("groth", "group completion of a finite commutative monoid");
  groth->add_option("--table", path, "Cayley table file, or - for stdin")->required();
  groth->callback([&] { action = [&] { return cmd_groth(path); }; });

  auto* bott = app.add_subcommand("bott-check", "Bott map on K(S^2)");
  bott->callback([&] { action = [] { return cmd_bott_check(); }; });

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", path, "matrix file, or - for stdin")->required();
  snf->callback([&] { action = [&] { return cmd_snf(path); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "ktcp: usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "ktcp: error: " << e.what() << "\n";
    return 2;
  }

  try {
    doc = action();
  } catch (const Error& e) {
    err << "ktcp: error: " << e.what() << "\n";
    return 1;
  }
  if (as_json || format == "machine")
    out << to_json(*doc).dump(2) << "\n";
  else
    out << render_human(*doc);
  return 0;
}

}  // namespace ktcp::cli
