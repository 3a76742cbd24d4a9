// Command-line front end: one operation per invocation, documents as file
// arguments, canonical text on stdout. Exit codes: 0 success, 1 domain
// errors (stable code string on stderr), 2 parse/usage errors.

#include "polycalc/errors.hpp"
#include "polycalc/io.hpp"
#include "polycalc/lp.hpp"
#include "polycalc/oracle.hpp"
#include "polycalc/set_ops.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace polycalc;

Document load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(1, 1, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parseDocument(buffer.str(), path);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + e.message());
  }
}

[[noreturn]] void usage(const std::string& message) {
  throw CLI::ValidationError(message);
}

Polyhedron asSet(const Document& doc) {
  if (doc.kind == Document::Kind::HRep) return Polyhedron::fromConstraints(*doc.hrep);
  if (doc.kind == Document::Kind::VRep) return Polyhedron::fromGenerators(*doc.vrep);
  usage(doc.name + ": expected a set (hrep or vrep)");
}

GPCFunction asFunction(const Document& doc) {
  if (doc.kind != Document::Kind::Function) usage(doc.name + ": expected a function");
  return *doc.function;
}

RVector asVector(const Document& doc) {
  if (doc.kind != Document::Kind::Vector) usage(doc.name + ": expected a vector");
  return *doc.vector;
}

RMatrix asMap(const Document& doc) {
  if (doc.kind != Document::Kind::Map) usage(doc.name + ": expected a map");
  return *doc.map;
}

// Sets computed from an operation print in the representation of the first
// set input, so pipelines keep a consistent kind.
void printSetAs(const Polyhedron& p, Document::Kind kind) {
  if (kind == Document::Kind::VRep) std::cout << printVRep(p.generators());
  else std::cout << printHRep(p.constraints());
}

void printBool(bool value) { std::cout << (value ? "true" : "false") << "\n"; }

std::vector<RVector> oracleDualSamples(const GPCFunction& f) {
  std::vector<RVector> samples;
  samples.push_back(zeroVector(f.dim()));
  for (Index i = 0; i < f.dim(); ++i) {
    samples.push_back(unitVector(f.dim(), i));
    samples.push_back(RVector(-unitVector(f.dim(), i)));
  }
  for (const Piece& p : f.pieces()) {
    samples.push_back(p.slope);
    for (const Piece& q : f.pieces()) samples.push_back(RVector((p.slope + q.slope) / 2));
  }
  return samples;
}

int runCommand(const std::string& command, const std::vector<std::string>& files,
               bool withOracle) {
  std::vector<Document> docs;
  for (const std::string& f : files) docs.push_back(load(f));
  auto need = [&](size_t n) {
    if (docs.size() != n)
      usage(command + " takes " + std::to_string(n) + " file argument(s)");
  };

  if (command == "convert") {
    need(1);
    const Polyhedron p = asSet(docs[0]);
    printSetAs(p, docs[0].kind == Document::Kind::HRep ? Document::Kind::VRep
                                                       : Document::Kind::HRep);
  } else if (command == "canonical") {
    need(1);
    switch (docs[0].kind) {
      case Document::Kind::HRep:
        std::cout << printHRep(Polyhedron::fromConstraints(*docs[0].hrep).constraints());
        break;
      case Document::Kind::VRep:
        std::cout << printVRep(Polyhedron::fromGenerators(*docs[0].vrep).generators());
        break;
      default:
        std::cout << printDocument(docs[0]);  // functions canonicalize on parse
    }
  } else if (command == "contains") {
    need(2);
    printBool(asSet(docs[0]).contains(asVector(docs[1])));
  } else if (command == "empty") {
    need(1);
    printBool(asSet(docs[0]).isEmpty());
  } else if (command == "equal") {
    need(2);
    printBool(setEqual(asSet(docs[0]), asSet(docs[1])));
  } else if (command == "sum") {
    need(2);
    printSetAs(minkowskiSum(asSet(docs[0]), asSet(docs[1])), docs[0].kind);
  } else if (command == "intersect") {
    need(2);
    printSetAs(intersection(asSet(docs[0]), asSet(docs[1])), docs[0].kind);
  } else if (command == "hull-union") {
    if (docs.empty()) usage("hull-union takes at least one file");
    std::vector<Polyhedron> parts;
    for (const Document& d : docs) parts.push_back(asSet(d));
    printSetAs(hullUnion(parts), docs[0].kind);
  } else if (command == "image") {
    need(2);
    printSetAs(image(asMap(docs[0]), asSet(docs[1])), docs[1].kind);
  } else if (command == "preimage") {
    need(2);
    printSetAs(preimage(asMap(docs[0]), asSet(docs[1])), docs[1].kind);
  } else if (command == "recession") {
    need(1);
    printSetAs(recessionCone(asSet(docs[0])), docs[0].kind);
  } else if (command == "cone") {
    need(1);
    printSetAs(generatedCone(asSet(docs[0])), docs[0].kind);
  } else if (command == "tangent") {
    need(2);
    printSetAs(tangentCone(asSet(docs[0]), asVector(docs[1])), docs[0].kind);
  } else if (command == "normal") {
    need(2);
    printSetAs(normalCone(asSet(docs[0]), asVector(docs[1])), docs[0].kind);
  } else if (command == "polar") {
    need(1);
    printSetAs(polar(asSet(docs[0])), docs[0].kind);
  } else if (command == "separate") {
    need(2);
    const SeparationResult r = separate(asSet(docs[0]), asSet(docs[1]));
    if (r.intersects) {
      std::cout << "intersecting\npoint " << toString(r.witness) << "\n";
    } else {
      std::cout << "separating\nfunctional " << toString(r.functional) << "\n"
                << "sup " << toString(r.supFirst) << "\n"
                << "inf " << toString(r.infSecond) << "\n";
    }
  } else if (command == "faces") {
    need(1);
    const Polyhedron p = asSet(docs[0]);
    const std::vector<Face> faces = enumerateFaces(p);
    if (withOracle) {
      if (!oracle::sameFaces(faces, oracle::bruteForceFaces(p)))
        throw Error(ErrorCode::OracleMismatch, "face enumeration");
      std::cerr << "oracle: ok\n";
    }
    for (size_t i = 0; i < faces.size(); ++i) {
      std::cout << "face dim=" << affineDimension(faces[i].body) << " active=";
      for (size_t j = 0; j < faces[i].activeSet.size(); ++j) {
        if (j > 0) std::cout << ",";
        std::cout << faces[i].activeSet[j];
      }
      if (faces[i].activeSet.empty()) std::cout << "-";
      std::cout << "\n" << printHRep(faces[i].body.constraints());
      if (i + 1 < faces.size()) std::cout << "\n";
    }
  } else if (command == "ripoint") {
    need(1);
    std::cout << printVector(relativeInteriorPoint(asSet(docs[0])));
  } else if (command == "feval") {
    need(2);
    std::cout << evaluate(asFunction(docs[0]), asVector(docs[1])) << "\n";
  } else if (command == "fsum") {
    need(2);
    std::cout << printFunction(add(asFunction(docs[0]), asFunction(docs[1])));
  } else if (command == "fconj") {
    need(1);
    const GPCFunction f = asFunction(docs[0]);
    const GPCFunction star = conjugate(f);
    if (withOracle) {
      for (const RVector& xs : oracleDualSamples(f)) {
        if (!(evaluate(star, xs) == oracle::conjugateValue(f, xs)))
          throw Error(ErrorCode::OracleMismatch, "conjugate at " + toString(xs));
      }
      std::cerr << "oracle: ok\n";
    }
    std::cout << printFunction(star);
  } else if (command == "fsubdiff") {
    need(2);
    std::cout << printVRep(subdifferential(asFunction(docs[0]), asVector(docs[1])).generators());
  } else if (command == "fdirderiv") {
    need(2);
    const GPCFunction f = asFunction(docs[0]);
    const RVector x = asVector(docs[1]);
    const GPCFunction derivative = directionalDerivative(f, x);
    if (withOracle) {
      std::vector<RVector> directions;
      for (Index i = 0; i < f.dim(); ++i) {
        directions.push_back(unitVector(f.dim(), i));
        directions.push_back(RVector(-unitVector(f.dim(), i)));
      }
      for (const RVector& h : directions) {
        if (!(evaluate(derivative, h) == oracle::directionalDerivativeQuotient(f, x, h)))
          throw Error(ErrorCode::OracleMismatch, "directional derivative along " + toString(h));
      }
      std::cerr << "oracle: ok\n";
    }
    std::cout << printFunction(derivative);
  } else if (command == "finfconv") {
    need(2);
    std::cout << printFunction(infConvolution(asFunction(docs[0]), asFunction(docs[1])));
  } else if (command == "findicator") {
    need(1);
    std::cout << printFunction(indicator(asSet(docs[0])));
  } else if (command == "fycheck") {
    need(3);
    printBool(fenchelYoungCheck(asFunction(docs[0]), asVector(docs[1]), asVector(docs[2])));
  } else {
    usage("unknown command '" + command + "'");
  }
  return 0;
}

// expose needs the index list argument, handled separately from the
// file-only commands.
int runExpose(const std::string& file, const std::string& indexList) {
  const Document doc = load(file);
  const Polyhedron p = asSet(doc);
  std::vector<Index> indices;
  std::stringstream ss(indexList);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item == "-") continue;
    try {
      indices.push_back(static_cast<Index>(std::stol(item)));
    } catch (const std::exception&) {
      usage("bad active index '" + item + "'");
    }
  }
  for (Index i : indices) {
    if (i < 0 || i >= p.constraints().ineqCount()) usage("active index out of range");
  }
  const Polyhedron body = faceFromIndexSet(p, indices);
  if (body.isEmpty()) throw Error(ErrorCode::EmptySet, "face is empty");
  const std::vector<Index> canonical = activeSet(p, relativeInteriorPoint(body));
  std::cout << printVector(exposingFunctional(p, Face{canonical, body}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polyhedral convex analysis calculator"};
  app.require_subcommand(1);

  const std::vector<std::string> setCommands = {
      "convert", "canonical", "contains", "empty",     "equal",     "sum",
      "intersect", "hull-union", "image",  "preimage",  "recession", "cone",
      "tangent", "normal",    "polar",    "separate",  "faces",     "ripoint",
      "feval",   "fsum",      "fconj",    "fsubdiff",  "fdirderiv", "finfconv",
      "findicator", "fycheck"};

  struct Invocation {
    std::vector<std::string> files;
    bool oracle = false;
  };
  std::map<std::string, Invocation> invocations;
  for (const std::string& name : setCommands) {
    CLI::App* sub = app.add_subcommand(name);
    Invocation& inv = invocations[name];
    sub->add_option("files", inv.files, "input documents");
    if (name == "faces" || name == "fconj" || name == "fdirderiv")
      sub->add_flag("--oracle", inv.oracle, "re-check the result against the brute-force oracle");
  }
  CLI::App* expose = app.add_subcommand("expose");
  std::string exposeFile, exposeActive;
  expose->add_option("file", exposeFile)->required();
  expose->add_option("active", exposeActive)->required();

  try {
    app.parse(argc, argv);
    if (expose->parsed()) return runExpose(exposeFile, exposeActive);
    for (const auto& [name, inv] : invocations) {
      if (app.get_subcommand(name)->parsed()) return runCommand(name, inv.files, inv.oracle);
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const polycalc::ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const polycalc::Error& e) {
    std::cerr << "error: " << polycalc::errorCodeName(e.code()) << "\n";
    return 1;
  }
}
