#pragma once

// Subcommand front end. run() returns the process exit status: 0 success,
// 1 verification mismatch, 2 usage or input error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altknot/conway.hpp"
#include "altknot/diagram.hpp"
#include "altknot/families.hpp"
#include "altknot/family_spec.hpp"
#include "altknot/gauss_code.hpp"
#include "altknot/knot_matrix.hpp"
#include "altknot/serialize.hpp"
#include "altknot/verify.hpp"

namespace altknot::cli {

namespace detail {

/// A Gauss code or family spec, resolved to its matrix.
struct Input {
  KnotMatrix matrix;
  std::size_t crossings = 0;
  std::size_t freeLoops = 0;  // crossingless circles
};

inline Input resolve(const std::string& gauss, const std::string& spec) {
  Input in;
  if (!spec.empty()) {
    const Diagram d = parseFamilySpec(spec);
    in.crossings = d.crossingCount();
    in.freeLoops = d.freeLoops();
    if (d.crossingCount() > 0) in.matrix = diagramMatrix(d);
    return in;
  }
  const GaussCode g = parseGaussCode(gauss);
  in.matrix = toMatrix(g);
  in.crossings = g.crossingCount();
  if (g.componentCount() == 0) in.freeLoops = 1;
  return in;
}

inline IntPolynomial polyOf(const Input& in) {
  if (in.freeLoops > 0 || in.crossings == 0) return {};
  return charPoly(in.matrix);
}

inline Integer conwayOf(const Input& in) {
  if (in.crossings == 0) return in.freeLoops == 1 ? 1 : 0;
  return conwayNumberFromPoly(polyOf(in), in.crossings);
}

template <typename T>
std::vector<T> parseList(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw SyntaxError(std::string(what) + ": bad number '" + item + "'");
    if (value < 1) throw InvalidArgument(std::string(what) + ": values must be >= 1, got '" + item + "'");
    out.push_back(static_cast<T>(value));
  }
  if (out.empty()) throw EmptyVector(std::string(what) + ": empty list");
  return out;
}

inline std::string joined(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

inline void printPermutation(std::ostream& out, const std::vector<std::size_t>& perm) {
  for (std::size_t j = 0; j < perm.size(); ++j) out << (j ? " " : "") << perm[j] + 1;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Characteristic polynomials and Conway numbers of alternating knots"};
  app.require_subcommand(1);

  std::string gauss, spec, format = "plain";
  auto addInput = [&](CLI::App* sub) {
    auto* g = sub->add_option("--gauss", gauss, "Gauss code, e.g. \"O1 U2 O3 U1 O2 U3\"");
    auto* s = sub->add_option("--spec", spec, "family spec, e.g. \"rational:4,3\"");
    g->excludes(s);
    s->excludes(g);
    sub->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
  };
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial det(xI - M)");
  addInput(charpoly);
  auto* conway = app.add_subcommand("conway", "Conway number P'(2)/V");
  addInput(conway);
  auto* decompose = app.add_subcommand("decompose", "permutation-pair decompositions of M");
  addInput(decompose);
  auto* comps = app.add_subcommand("components", "number of link components");
  addInput(comps);

  auto* family = app.add_subcommand("family", "closed-form family polynomials");
  family->require_subcommand(1);
  std::string famName, famParams;
  int sweepMax = 4;
  std::string famFormat = "plain";
  auto* famPoly = family->add_subcommand("poly", "closed form of one family member");
  famPoly->add_option("--name", famName, "family name")->required();
  famPoly->add_option("--params", famParams, "comma-separated parameters")->required();
  famPoly->add_option("--format", famFormat)->check(CLI::IsMember({"plain", "json", "csv"}));
  auto* famSweep = family->add_subcommand("sweep", "all members with parameters up to --max");
  famSweep->add_option("--name", famName, "family name")->required();
  famSweep->add_option("--max", sweepMax, "largest parameter")->check(CLI::Range(1, 30));
  famSweep->add_option("--format", famFormat)->check(CLI::IsMember({"plain", "json", "csv"}));

  auto* cat = app.add_subcommand("catalog", "families of alternating knots with N ribbons");
  int ribbons = 0;
  bool catJson = false;
  cat->add_option("--ribbons", ribbons, "N in 1..5")->required();
  cat->add_flag("--json", catJson, "JSON output");

  auto* bracket = app.add_subcommand("bracket", "Gauss bracket numerator/denominator");
  std::string bracketA;
  bracket->add_option("--a", bracketA, "comma-separated crossing counts")->required();

  auto* verify = app.add_subcommand("verify", "run the acceptance sweeps");
  std::string suite = "all";
  verify->add_option("--suite", suite, "all, recurrences, oracle, conway or eq13")
      ->check(CLI::IsMember({"all", "recurrences", "oracle", "conway", "eq13"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const bool json = format == "json";
    auto requireInput = [&](CLI::App* sub) {
      if (gauss.empty() && spec.empty() && sub->count("--gauss") == 0)
        throw InvalidArgument(sub->get_name() + ": give --gauss or --spec");
    };
    if (charpoly->parsed()) {
      requireInput(charpoly);
      const auto in = detail::resolve(gauss, spec);
      const IntPolynomial p = detail::polyOf(in);
      if (json)
        out << Json{{"polynomial", p.toString()}, {"crossings", in.crossings}, {"matrix", matrixJson(in.matrix)}}.dump()
            << '\n';
      else
        out << p << '\n';
      return 0;
    }
    if (conway->parsed()) {
      requireInput(conway);
      const auto in = detail::resolve(gauss, spec);
      const Integer c = detail::conwayOf(in);
      if (json)
        out << Json{{"conway", integerJson(c)}, {"crossings", in.crossings}}.dump() << '\n';
      else
        out << "conway=" << c << " crossings=" << in.crossings << '\n';
      return 0;
    }
    if (decompose->parsed()) {
      requireInput(decompose);
      const auto in = detail::resolve(gauss, spec);
      const auto ds = permutationDecompositions(in.matrix);
      if (json) {
        Json list = Json::array();
        for (const auto& d : ds) list.push_back(decompositionJson(d));
        out << Json{{"count", ds.size()}, {"decompositions", std::move(list)}}.dump() << '\n';
      } else {
        out << "count=" << ds.size() << '\n';
        for (const auto& d : ds) {
          out << "P: ";
          detail::printPermutation(out, d.first);
          out << " | Q: ";
          detail::printPermutation(out, d.second);
          out << '\n';
        }
      }
      return 0;
    }
    if (comps->parsed()) {
      requireInput(comps);
      const auto in = detail::resolve(gauss, spec);
      ComponentPartition p;
      if (in.crossings > 0) p = components(in.matrix);
      const std::size_t k = p.count() + in.freeLoops;
      if (json) {
        Json j = componentsJson(p);
        j["components"] = k;
        out << j.dump() << '\n';
      } else {
        out << "components=" << k << '\n';
      }
      return 0;
    }
    if (famPoly->parsed()) {
      const FamilyId id(parseFamilyName(famName), detail::parseList<int>(famParams, "--params"));
      const IntPolynomial p = familyPoly(id);
      const Integer c = conwayNumberFromPoly(p, id.crossings());
      if (famFormat == "json")
        out << familyInstanceJson(id, p, c).dump() << '\n';
      else if (famFormat == "csv")
        out << "params,polynomial,conway,crossings\n\"" << detail::joined(id.params) << "\"," << p << ',' << c << ','
            << id.crossings() << '\n';
      else
        out << p << '\n';
      return 0;
    }
    if (famSweep->parsed()) {
      const FamilyName name = parseFamilyName(famName);
      const std::size_t arity = familyArity(name);
      std::vector<int> params(arity, 1);
      Json rows = Json::array();
      if (famFormat == "csv") out << "params,polynomial,conway,crossings\n";
      while (true) {
        const FamilyId id(name, params);
        const IntPolynomial p = familyPoly(id);
        const Integer c = conwayNumberFromPoly(p, id.crossings());
        if (famFormat == "json")
          rows.push_back(familyInstanceJson(id, p, c));
        else if (famFormat == "csv")
          out << '"' << detail::joined(params) << "\"," << p << ',' << c << ',' << id.crossings() << '\n';
        else
          out << familyNameString(name) << '(' << detail::joined(params) << ") conway=" << c << " : " << p << '\n';
        std::size_t i = arity;
        while (i-- > 0) {
          if (params[i] < sweepMax) {
            ++params[i];
            break;
          }
          params[i] = 1;
        }
        if (i == static_cast<std::size_t>(-1)) break;
      }
      if (famFormat == "json") out << rows.dump(2) << '\n';
      return 0;
    }
    if (cat->parsed()) {
      const auto entries = catalog(ribbons);
      if (catJson) {
        out << catalogJson(entries).dump(2) << '\n';
      } else {
        for (const auto& e : entries) {
          out << e.ribbons << '.' << e.index << "  " << e.function.toString() << "  terms=" << e.function.termCount()
              << "  representative=" << e.representative << (e.rational ? "  rational" : "");
          if (!hasRealization(e)) out << "  (no tangle construction)";
          out << '\n';
        }
      }
      return 0;
    }
    if (bracket->parsed()) {
      const auto a = detail::parseList<long long>(bracketA, "--a");
      std::vector<Integer> v(a.begin(), a.end());
      out << gaussBracketNumerator(v) << '/' << gaussBracketDenominator(v) << '\n';
      return 0;
    }
    if (verify->parsed()) {
      return runSuite(parseSuite(suite), out) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace altknot::cli
