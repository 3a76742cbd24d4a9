#include "polycalc/io.hpp"

#include "polycalc/errors.hpp"

#include <sstream>

namespace polycalc {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  int number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    Line line{number, {}};
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, size_t token, const std::string& message) {
  const int column = token < line.tokens.size() ? line.tokens[token].column
                     : line.tokens.empty()      ? 1
                        : line.tokens.back().column + static_cast<int>(line.tokens.back().text.size());
  throw ParseError(line.number, column, message);
}

Rational parseValue(const Line& line, size_t token) {
  try {
    return parseRational(line.tokens.at(token).text);
  } catch (const std::exception&) {
    fail(line, token, "expected rational, got '" + line.tokens[token].text + "'");
  }
}

Index parseHeaderCount(const Line& line, size_t token, const std::string& key) {
  if (token >= line.tokens.size()) fail(line, token, "missing " + key + "=N");
  const std::string& t = line.tokens[token].text;
  if (t.rfind(key + "=", 0) != 0) fail(line, token, "expected " + key + "=N");
  try {
    const long n = std::stol(t.substr(key.size() + 1));
    if (n < 1) fail(line, token, key + " must be positive");
    return static_cast<Index>(n);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, token, "malformed " + key + "=N");
  }
}

RVector parseCoefficients(const Line& line, size_t first, Index count) {
  RVector v(count);
  for (Index i = 0; i < count; ++i) {
    if (first + static_cast<size_t>(i) >= line.tokens.size())
      fail(line, line.tokens.size(), "expected " + std::to_string(count) + " coefficients");
    v(i) = parseValue(line, first + static_cast<size_t>(i));
  }
  return v;
}

void expectEnd(const Line& line, size_t after) {
  if (after < line.tokens.size()) fail(line, after, "unexpected trailing tokens");
}

// eq a1 .. aN = b  |  ineq a1 .. aN <= b
void parseConstraintRow(const Line& line, ConstraintForm& c) {
  const std::string& kind = line.tokens[0].text;
  const bool equality = kind == "eq";
  const RVector lhs = parseCoefficients(line, 1, c.dim);
  const size_t sep = 1 + static_cast<size_t>(c.dim);
  const std::string expected = equality ? "=" : "<=";
  if (sep >= line.tokens.size() || line.tokens[sep].text != expected)
    fail(line, sep, "expected '" + expected + "'");
  const Rational rhs = parseValue(line, sep + 1);
  expectEnd(line, sep + 2);
  if (equality) c.appendEquality(lhs, rhs);
  else c.appendInequality(lhs, rhs);
}

}  // namespace

Document parseDocument(const std::string& text, const std::string& name) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document");

  const Line& header = lines[0];
  const std::string& kind = header.tokens[0].text;
  Document doc;
  doc.name = name;

  if (kind == "hrep" || kind == "vrep") {
    const Index dim = parseHeaderCount(header, 1, "dim");
    expectEnd(header, 2);
    if (kind == "hrep") {
      doc.kind = Document::Kind::HRep;
      ConstraintForm c = ConstraintForm::universe(dim);
      for (size_t l = 1; l < lines.size(); ++l) {
        const std::string& row = lines[l].tokens[0].text;
        if (row != "eq" && row != "ineq") fail(lines[l], 0, "expected eq or ineq row");
        parseConstraintRow(lines[l], c);
      }
      doc.hrep = std::move(c);
    } else {
      doc.kind = Document::Kind::VRep;
      GeneratorForm g = GeneratorForm::empty(dim);
      for (size_t l = 1; l < lines.size(); ++l) {
        const std::string& row = lines[l].tokens[0].text;
        const RVector v = parseCoefficients(lines[l], 1, dim);
        expectEnd(lines[l], 1 + static_cast<size_t>(dim));
        if (row == "point") g.points.push_back(v);
        else if (row == "ray") g.rays.push_back(v);
        else if (row == "lin") g.lineality.push_back(v);
        else fail(lines[l], 0, "expected point, ray or lin row");
      }
      doc.vrep = std::move(g);
    }
    return doc;
  }

  if (kind == "function") {
    const Index dim = parseHeaderCount(header, 1, "dim");
    expectEnd(header, 2);
    doc.kind = Document::Kind::Function;
    if (lines.size() < 2 || lines[1].tokens[0].text != "domain")
      throw ParseError(header.number + 1, 1, "function needs a domain line");
    const Line& dom = lines[1];
    if (dom.tokens.size() < 2 || dom.tokens[1].text != "hrep")
      fail(dom, 1, "domain must be an hrep");
    if (parseHeaderCount(dom, 2, "dim") != dim) fail(dom, 2, "domain dim mismatch");
    expectEnd(dom, 3);

    ConstraintForm domain = ConstraintForm::universe(dim);
    std::vector<Piece> pieces;
    bool inPieces = false;
    for (size_t l = 2; l < lines.size(); ++l) {
      const std::string& row = lines[l].tokens[0].text;
      if (row == "piece") {
        inPieces = true;
        const RVector slope = parseCoefficients(lines[l], 1, dim);
        const Rational offset = parseValue(lines[l], 1 + static_cast<size_t>(dim));
        expectEnd(lines[l], 2 + static_cast<size_t>(dim));
        pieces.push_back({slope, offset});
      } else if (row == "eq" || row == "ineq") {
        if (inPieces) fail(lines[l], 0, "domain rows must precede pieces");
        parseConstraintRow(lines[l], domain);
      } else {
        fail(lines[l], 0, "expected eq, ineq or piece row");
      }
    }
    if (pieces.empty())
      throw ParseError(lines.back().number, 1, "function needs at least one piece");
    doc.function = GPCFunction(std::move(domain), std::move(pieces));
    return doc;
  }

  if (kind == "vector") {
    const Index dim = parseHeaderCount(header, 1, "dim");
    expectEnd(header, 2);
    doc.kind = Document::Kind::Vector;
    if (lines.size() != 2 || lines[1].tokens[0].text != "point")
      throw ParseError(header.number, 1, "vector needs exactly one point row");
    doc.vector = parseCoefficients(lines[1], 1, dim);
    expectEnd(lines[1], 1 + static_cast<size_t>(dim));
    return doc;
  }

  if (kind == "map") {
    const Index rows = parseHeaderCount(header, 1, "rows");
    const Index cols = parseHeaderCount(header, 2, "cols");
    expectEnd(header, 3);
    doc.kind = Document::Kind::Map;
    if (lines.size() != static_cast<size_t>(rows) + 1)
      throw ParseError(header.number, 1, "map needs exactly rows=N row lines");
    RMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      const Line& line = lines[static_cast<size_t>(r) + 1];
      if (line.tokens[0].text != "row") fail(line, 0, "expected row line");
      m.row(r) = parseCoefficients(line, 1, cols).transpose();
      expectEnd(line, 1 + static_cast<size_t>(cols));
    }
    doc.map = std::move(m);
    return doc;
  }

  fail(header, 0, "unknown document kind '" + kind + "'");
}

std::string printHRep(const ConstraintForm& c) {
  std::ostringstream out;
  out << "hrep dim=" << c.dim << "\n";
  for (Index i = 0; i < c.eqCount(); ++i)
    out << "eq " << toString(RVector(c.eqLhs.row(i).transpose())) << " = "
        << toString(c.eqRhs(i)) << "\n";
  for (Index i = 0; i < c.ineqCount(); ++i)
    out << "ineq " << toString(RVector(c.ineqLhs.row(i).transpose())) << " <= "
        << toString(c.ineqRhs(i)) << "\n";
  return out.str();
}

std::string printVRep(const GeneratorForm& g) {
  std::ostringstream out;
  out << "vrep dim=" << g.dim << "\n";
  for (const RVector& u : g.points) out << "point " << toString(u) << "\n";
  for (const RVector& v : g.rays) out << "ray " << toString(v) << "\n";
  for (const RVector& w : g.lineality) out << "lin " << toString(w) << "\n";
  return out.str();
}

std::string printFunction(const GPCFunction& f) {
  std::ostringstream out;
  out << "function dim=" << f.dim() << "\n";
  out << "domain hrep dim=" << f.dim() << "\n";
  const ConstraintForm& d = f.domain();
  for (Index i = 0; i < d.eqCount(); ++i)
    out << "eq " << toString(RVector(d.eqLhs.row(i).transpose())) << " = "
        << toString(d.eqRhs(i)) << "\n";
  for (Index i = 0; i < d.ineqCount(); ++i)
    out << "ineq " << toString(RVector(d.ineqLhs.row(i).transpose())) << " <= "
        << toString(d.ineqRhs(i)) << "\n";
  for (const Piece& p : f.pieces())
    out << "piece " << toString(p.slope) << " " << toString(p.offset) << "\n";
  return out.str();
}

std::string printVector(const RVector& v) {
  std::ostringstream out;
  out << "vector dim=" << v.size() << "\n";
  out << "point " << toString(v) << "\n";
  return out.str();
}

std::string printMap(const RMatrix& m) {
  std::ostringstream out;
  out << "map rows=" << m.rows() << " cols=" << m.cols() << "\n";
  for (Index r = 0; r < m.rows(); ++r)
    out << "row " << toString(RVector(m.row(r).transpose())) << "\n";
  return out.str();
}

std::string printDocument(const Document& doc) {
  switch (doc.kind) {
    case Document::Kind::HRep: return printHRep(*doc.hrep);
    case Document::Kind::VRep: return printVRep(*doc.vrep);
    case Document::Kind::Function: return printFunction(*doc.function);
    case Document::Kind::Vector: return printVector(*doc.vector);
    case Document::Kind::Map: return printMap(*doc.map);
  }
  throw std::logic_error("unreachable");
}

}  // namespace polycalc
