#include "commands.hpp"

#include <json.hpp>
#include <sstream>

#include "cplx_format.hpp"
#include "reescm/errors.hpp"
#include "reescm/rees.hpp"
#include "reescm/stanley_reisner.hpp"
#include "reescm/version.hpp"

namespace reescm::cli {

using json = nlohmann::ordered_json;

namespace {

json face_json(Face f) {
  json arr = json::array();
  for (int v : f.vertices()) arr.push_back(v);
  return arr;
}

json facets_json(const std::vector<Face>& facets) {
  json arr = json::array();
  for (Face f : facets) arr.push_back(face_json(f));
  return arr;
}

json ints_json(const std::vector<Int>& values) {
  json arr = json::array();
  for (const Int& v : values) arr.push_back(v.str());
  return arr;
}

json series_json(const HilbertSeries& s) {
  json j;
  j["numerator"] = ints_json(s.numerator().coeffs());
  j["pole_order"] = s.pole_order();
  if (auto d = s.degree())
    j["degree"] = *d;
  else
    j["degree"] = nullptr;
  return j;
}

json envelope(const std::string& command) {
  json j;
  j["tool"] = "reescm";
  j["version"] = kVersion;
  j["command"] = command;
  return j;
}

char hex_digit(std::uint64_t v) {
  return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10));
}

std::string digest_string(std::string_view bytes) {
  const std::uint64_t h = fnv1a(bytes);
  std::string out = "fnv1a:";
  for (int shift = 60; shift >= 0; shift -= 4) out += hex_digit((h >> shift) & 0xf);
  return out;
}

json input_json(const std::string& path, std::string_view text,
                const SimplicialComplex& c) {
  json j;
  j["path"] = path;
  j["digest"] = digest_string(text);
  j["vertex_count"] = c.vertex_count();
  j["facets"] = facets_json(c.facets());
  return j;
}

std::string face_text(Face f) {
  if (f.is_empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (int v : f.vertices()) {
    if (!first) out += ' ';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string facets_text(const std::vector<Face>& facets) {
  std::string out;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (i) out += ' ';
    out += face_text(facets[i]);
  }
  return out;
}

void emit(const json& doc, const CommonOptions& opts, std::ostream& out,
          const std::string& pretty_text) {
  if (opts.pretty)
    out << pretty_text;
  else
    out << doc.dump(2) << '\n';
}

SimplicialComplex load(const std::string& path, std::string& text) {
  text = read_file(path);
  return parse_complex(text);
}

std::string field_name(Field f) {
  return f.is_rationals() ? "q" : "p:" + std::to_string(f.characteristic());
}

}  // namespace

Field parse_field(const std::string& spec) {
  if (spec == "q" || spec == "Q") return Field::rationals();
  if (spec.rfind("p:", 0) == 0) {
    try {
      return Field::prime(std::stoull(spec.substr(2)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw SyntaxError("bad field spec '" + spec + "'");
    }
  }
  throw SyntaxError("field must be 'q' or 'p:<prime>', got '" + spec + "'");
}

int cmd_analyze(const std::string& path, const CommonOptions& opts, std::ostream& out) {
  std::string text;
  const auto c = load(path, text);
  const auto f = f_vector(c);
  const auto h = h_vector(c);
  const auto nonfaces = minimal_nonfaces(c);
  const auto primes = minimal_primes(c);

  json doc = envelope("analyze");
  doc["input"] = input_json(path, text, c);
  doc["dimension"] = c.dimension();
  doc["pure"] = c.is_pure();
  doc["facet_count"] = c.facet_count();
  doc["f_vector"] = ints_json(f.counts);
  doc["h_vector"] = ints_json(h.entries);
  doc["minimal_nonfaces"] = facets_json(nonfaces.generators);
  doc["minimal_primes"] = facets_json(primes);

  std::ostringstream pretty;
  pretty << "complex: " << c.vertex_count() << " vertices, " << c.facet_count()
         << " facets, dimension " << c.dimension() << (c.is_pure() ? ", pure" : ", not pure")
         << '\n'
         << "facets:            " << facets_text(c.facets()) << '\n';
  pretty << "f-vector:         ";
  for (const Int& v : f.counts) pretty << ' ' << v;
  pretty << "\nh-vector:         ";
  for (const Int& v : h.entries) pretty << ' ' << v;
  pretty << "\nminimal non-faces: " << facets_text(nonfaces.generators) << '\n'
         << "minimal primes:    " << facets_text(primes) << '\n';
  emit(doc, opts, out, pretty.str());
  return 0;
}

int cmd_shelling(const std::string& path, bool nonincreasing, const CommonOptions& opts,
                 std::ostream& out) {
  std::string text;
  const auto c = load(path, text);
  const auto order = find_shelling(c, nonincreasing);

  json doc = envelope("shelling");
  doc["input"] = input_json(path, text, c);
  doc["require_nonincreasing_dims"] = nonincreasing;
  doc["shellable"] = order.has_value();
  std::ostringstream pretty;
  if (order) {
    auto [ok, steps] = verify_shelling(c, order->facets);
    doc["order"] = facets_json(order->facets);
    json step_arr = json::array();
    for (const auto& s : steps) {
      json sj;
      sj["index"] = s.index;
      sj["intersection_facets"] = facets_json(s.intersection.facets());
      sj["intersection_facet_count"] = s.intersection_facet_count;
      sj["pure"] = s.pure;
      sj["dimension_ok"] = s.dimension_ok;
      step_arr.push_back(std::move(sj));
    }
    doc["steps"] = std::move(step_arr);
    pretty << "shellable: yes\norder: " << facets_text(order->facets) << '\n';
    for (const auto& s : steps)
      pretty << "  step " << s.index << ": intersection "
             << facets_text(s.intersection.facets()) << '\n';
  } else {
    pretty << "shellable: no\n";
  }
  emit(doc, opts, out, pretty.str());
  return order ? 0 : 1;
}

int cmd_dimfilt(const std::string& path, const CommonOptions& opts, std::ostream& out) {
  std::string text;
  const auto c = load(path, text);
  const auto filt = dimension_filtration(c);
  const bool shellable = find_shelling(c, true).has_value();

  json doc = envelope("dimfilt");
  doc["input"] = input_json(path, text, c);
  doc["length"] = filt.length();
  doc["cardinalities"] = filt.cardinalities;
  json thetas = json::array();
  for (const auto& theta : filt.thetas) thetas.push_back(facets_json(theta.facets()));
  doc["thetas"] = std::move(thetas);
  json quotients = json::array();
  for (const auto& q : filt.quotients) {
    json qj;
    qj["index"] = q.index;
    qj["dimension"] = q.cardinality;
    qj["series"] = series_json(q.series);
    qj["a_invariant"] = *a_invariant(q.series);
    quotients.push_back(std::move(qj));
  }
  doc["quotients"] = std::move(quotients);
  // Series degree equals the a-invariant only for CM modules; the C_i of
  // shellable complexes are CM.
  doc["a_invariant_semantics"] =
      shellable ? "local-cohomology (quotients Cohen-Macaulay)" : "series-degree only";

  std::ostringstream pretty;
  pretty << "filtration length: " << filt.length() << '\n';
  for (const auto& q : filt.quotients)
    pretty << "  C_" << q.index << ": dimension " << q.cardinality << ", a-invariant "
           << *a_invariant(q.series) << '\n';
  emit(doc, opts, out, pretty.str());
  return 0;
}

int cmd_hilbert(const std::string& path, const std::optional<std::string>& sub_path,
                const CommonOptions& opts, std::ostream& out) {
  std::string text;
  const auto c = load(path, text);
  std::optional<SimplicialComplex> sub;
  std::string sub_text;
  if (sub_path) sub = load(*sub_path, sub_text);

  const auto series = hilbert_series_interval(c, sub);

  json doc = envelope("hilbert");
  doc["input"] = input_json(path, text, c);
  if (sub_path) doc["subcomplex"] = input_json(*sub_path, sub_text, *sub);
  doc["series"] = series_json(series);
  if (auto a = a_invariant(series))
    doc["a_invariant"] = *a;
  else
    doc["a_invariant"] = nullptr;
  doc["a_invariant_semantics"] = "series-degree only";

  std::ostringstream pretty;
  pretty << "H(t) = (";
  const auto& coeffs = series.numerator().coeffs();
  if (coeffs.empty()) pretty << '0';
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (k == 0)
      pretty << coeffs[k];
    else {
      pretty << (coeffs[k] > 0 ? " + " : " - ");
      const Int mag = coeffs[k] > 0 ? coeffs[k] : Int(-coeffs[k]);
      if (mag != 1) pretty << mag;
      pretty << "t";
      if (k > 1) pretty << '^' << k;
    }
  }
  pretty << ") / (1-t)^" << series.pole_order() << '\n';
  if (auto a = a_invariant(series))
    pretty << "degree: " << *a << '\n';
  else
    pretty << "degree: -infinity (zero module)\n";
  emit(doc, opts, out, pretty.str());
  return 0;
}

int cmd_homology(const std::string& path, Field field, const CommonOptions& opts,
                 std::ostream& out) {
  std::string text;
  const auto c = load(path, text);
  const auto profile = reduced_homology(c, field);

  json doc = envelope("homology");
  doc["input"] = input_json(path, text, c);
  doc["field"] = field_name(field);
  doc["min_dimension"] = -1;
  doc["reduced_betti"] = profile.betti;
  doc["cohen_macaulay"] = is_cohen_macaulay(c, field);
  doc["sequentially_cohen_macaulay"] = is_sequentially_cm(c, field);

  std::ostringstream pretty;
  pretty << "reduced Betti numbers over " << field_name(field) << ":\n";
  for (int i = -1; i <= c.dimension(); ++i)
    pretty << "  b~_" << i << " = " << profile.reduced_betti(i) << '\n';
  pretty << "Cohen-Macaulay: " << (doc["cohen_macaulay"].get<bool>() ? "yes" : "no")
         << "\nsequentially Cohen-Macaulay: "
         << (doc["sequentially_cohen_macaulay"].get<bool>() ? "yes" : "no") << '\n';
  emit(doc, opts, out, pretty.str());
  return 0;
}

int cmd_rees_check(const std::string& path, const CommonOptions& opts, std::ostream& out) {
  std::string text;
  const auto c = load(path, text);
  const auto report = cross_validate(c);

  json doc = envelope("rees-check");
  doc["input"] = input_json(path, text, c);
  doc["shelling_order"] = facets_json(report.order.facets);
  json steps = json::array();
  int failing_step = 0;
  for (const auto& s : report.steps) {
    json sj;
    sj["index"] = s.index;
    sj["facet"] = face_json(report.order.facets[static_cast<std::size_t>(s.index - 1)]);
    sj["facet_cardinality"] = s.facet_cardinality;
    sj["intersection_facet_count"] = s.intersection_facets;
    sj["strict"] = s.strict;
    sj["splitting_monomial"] = face_json(s.splitting_support);
    if (!s.strict && failing_step == 0) failing_step = s.index;
    steps.push_back(std::move(sj));
  }
  doc["steps"] = std::move(steps);
  doc["combinatorial_verdict"] = report.combinatorial_verdict;
  if (failing_step != 0)
    doc["failing_step"] = failing_step;
  else
    doc["failing_step"] = nullptr;
  doc["a_invariants"] = *report.a_invariants;
  doc["a_invariant_verdict"] = *report.a_invariant_verdict;
  doc["cross_check_agreed"] = *report.cross_check_agreed;
  doc["verdict"] = report.verdict();

  std::ostringstream pretty;
  pretty << "sequentially Cohen-Macaulay Rees algebra: "
         << (report.verdict() ? "YES" : "NO") << '\n'
         << "shelling order: " << facets_text(report.order.facets) << '\n';
  for (const auto& s : report.steps)
    pretty << "  step " << s.index << ": |F_" << s.index << "| = " << s.facet_cardinality
           << (s.strict ? " > " : " <= ") << s.intersection_facets
           << " intersection facet(s)" << (s.strict ? "" : "  <-- fails") << '\n';
  pretty << "a-invariants of filtration quotients:";
  for (int a : *report.a_invariants) pretty << ' ' << a;
  pretty << "\ncross-check agreed: " << (*report.cross_check_agreed ? "yes" : "no")
         << '\n';
  emit(doc, opts, out, pretty.str());
  return report.verdict() ? 0 : 1;
}

int cmd_sweep(const SweepOptions& sweep, const CommonOptions& opts, std::ostream& out) {
  const auto summary = run_sweep(sweep);

  json doc = envelope("sweep");
  json params;
  params["mode"] =
      sweep.mode == SweepOptions::Mode::exhaustive ? "exhaustive" : "random";
  params["max_vertices"] = sweep.max_vertices;
  if (sweep.mode == SweepOptions::Mode::random) {
    params["seed"] = sweep.seed;
    params["count"] = sweep.count;
  }
  params["field"] = field_name(sweep.homology_field);
  doc["parameters"] = std::move(params);
  doc["complexes"] = summary.complexes;
  doc["shellable"] = summary.shellable;
  doc["degenerate"] = summary.degenerate;
  doc["rees_true"] = summary.rees_true;
  doc["rees_false"] = summary.rees_false;
  doc["steps_checked"] = summary.steps_checked;
  doc["orders_checked"] = summary.orders_checked;
  doc["violations"] = summary.violation_count;
  json viols = json::array();
  for (const auto& v : summary.violations) {
    json vj;
    vj["kind"] = v.kind;
    vj["complex"] = v.complex_text;
    viols.push_back(std::move(vj));
  }
  doc["violation_list"] = std::move(viols);

  std::ostringstream pretty;
  pretty << "swept " << summary.complexes << " complexes, " << summary.shellable
         << " shellable, " << summary.rees_true << " Rees-positive, "
         << summary.rees_false << " Rees-negative\n"
         << "violations: " << summary.violation_count << '\n';
  for (const auto& v : summary.violations)
    pretty << "  " << v.kind << ": " << v.complex_text << '\n';
  emit(doc, opts, out, pretty.str());
  return summary.clean() ? 0 : 1;
}

int run_command(const std::string& command, const CommonOptions& opts, std::ostream& out,
                const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    json doc = envelope(command);
    json err;
    err["kind"] = e.kind();
    err["message"] = e.what();
    doc["error"] = std::move(err);
    emit(doc, opts, out, std::string("error: ") + e.kind() + ": " + e.what() + "\n");
    return 2;
  } catch (const std::exception& e) {
    json doc = envelope(command);
    json err;
    err["kind"] = "Error";
    err["message"] = e.what();
    doc["error"] = std::move(err);
    emit(doc, opts, out, std::string("error: ") + e.what() + "\n");
    return 2;
  }
}

}  // namespace reescm::cli
