#include "sigma8/io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace sigma8 {

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::form: return "form";
    case DocumentKind::enhanced_form: return "enhanced_form";
    case DocumentKind::symmetric_complex: return "symmetric_complex";
    case DocumentKind::groupring_complex: return "groupring_complex";
    case DocumentKind::representation: return "representation";
  }
  return "form";
}

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t col = 1;
};

class Cursor {
 public:
  explicit Cursor(const std::string& text) : s_(text) {}

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  Position where() const { return at_; }

  char get() {
    const char c = s_[pos_++];
    if (c == '\n') {
      ++at_.line;
      at_.col = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++at_.col;
    }
    return c;
  }

  void skip() {
    while (!at_end()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(at_.line, at_.col, msg); }

  void expect(char c) {
    skip();
    if (at_end()) fail(std::string("unexpected end of input, expected '") + c + "'");
    if (peek() != c) fail(std::string("expected '") + c + "', found '" + peek() + "'");
    get();
  }

  bool accept(char c) {
    skip();
    if (!at_end() && peek() == c) {
      get();
      return true;
    }
    return false;
  }

  std::string ident() {
    skip();
    if (at_end()) fail("unexpected end of input, expected a name");
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail(std::string("expected a name, found '") + peek() + "'");
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-'))
      out += get();
    return out;
  }

  Integer integer() {
    skip();
    if (at_end()) fail("unexpected end of input, expected an integer");
    std::string digits;
    if (peek() == '-') digits += get();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    return Integer(digits);
  }

  long index() {
    const Position p = where();
    const Integer v = integer();
    if (sgn(v) < 0 || v > 1000000) throw SyntaxError(p.line, p.col, "index out of range");
    return v.get_si();
  }

  std::vector<Integer> int_list() {
    std::vector<Integer> out;
    expect('[');
    if (accept(']')) return out;
    do {
      out.push_back(integer());
    } while (accept(','));
    expect(']');
    return out;
  }

  std::vector<std::string> name_list() {
    std::vector<std::string> out;
    expect('[');
    if (accept(']')) return out;
    do {
      out.push_back(ident());
    } while (accept(','));
    expect(']');
    return out;
  }

  std::vector<std::vector<Integer>> int_rows() {
    std::vector<std::vector<Integer>> out;
    expect('[');
    if (accept(']')) return out;
    do {
      out.push_back(int_list());
    } while (accept(','));
    expect(']');
    return out;
  }

  struct Cell {
    std::string text;
    Position at;
  };

  std::vector<std::vector<Cell>> cell_rows() {
    std::vector<std::vector<Cell>> out;
    expect('[');
    if (accept(']')) return out;
    do {
      expect('[');
      std::vector<Cell> row;
      do {
        skip();
        Cell cell{{}, where()};
        while (!at_end() && peek() != ',' && peek() != ']') {
          if (peek() == '\n' || peek() == '[') fail("unterminated matrix entry");
          cell.text += get();
        }
        if (at_end()) fail("unexpected end of input inside a matrix");
        while (!cell.text.empty() && std::isspace(static_cast<unsigned char>(cell.text.back())))
          cell.text.pop_back();
        if (cell.text.empty()) fail("empty matrix entry");
        row.push_back(std::move(cell));
      } while (accept(','));
      expect(']');
      out.push_back(std::move(row));
    } while (accept(','));
    expect(']');
    return out;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  Position at_;
};

using Rows = std::vector<std::vector<Integer>>;
using CellRows = std::vector<std::vector<Cursor::Cell>>;

template <class M>
void check_rect(const std::vector<M>& rows, const std::string& path) {
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw SchemaError(path, "rows have different lengths");
}

IntMatrix to_matrix(const Rows& rows, const std::string& path) {
  if (rows.empty()) return IntMatrix(0, 0);
  check_rect(rows, path);
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

template <class T>
void require_shape(const Matrix<T>& m, std::size_t r, std::size_t c, const std::string& path) {
  if (m.rows() == r && m.cols() == c) return;
  if (m.rows() == 0 && m.cols() == 0 && (r == 0 || c == 0)) return;
  throw SchemaError(path, "expected shape " + std::to_string(r) + "x" + std::to_string(c) + ", found " + m.shape());
}

std::string indexed(const std::string& base, std::initializer_list<long> idx) {
  std::string out = base;
  for (long i : idx) out += "[" + std::to_string(i) + "]";
  return out;
}

// Entries shared by both complex kinds.
template <class Cells>
struct ComplexEntries {
  std::optional<long> dim;
  std::optional<std::vector<Integer>> ranks;
  std::map<long, Cells> d;
  std::map<std::pair<long, long>, Cells> phi;
};

class DocumentParser {
 public:
  explicit DocumentParser(const std::string& text) : c_(text) {}

  Document parse() {
    c_.skip();
    const Position kind_at = c_.where();
    const std::string kind = c_.ident();
    Document doc;
    if (kind == "form") doc = parse_form();
    else if (kind == "enhanced_form") doc = parse_enhanced();
    else if (kind == "symmetric_complex") doc = parse_symmetric();
    else if (kind == "groupring_complex") doc = parse_groupring();
    else if (kind == "representation") doc = parse_rep();
    else
      throw SchemaError("document", "unknown kind '" + kind + "' at line " + std::to_string(kind_at.line));
    c_.skip();
    if (!c_.at_end()) c_.fail("unexpected text after the closing '}'");
    return doc;
  }

 private:
  // Reads `key` entries until '}'; returns false at the end of the body.
  bool next_key(std::string& key) {
    if (c_.accept('}')) return false;
    c_.skip();
    if (c_.at_end()) c_.fail("unexpected end of input, expected '}'");
    key = c_.ident();
    return true;
  }

  void once(std::set<std::string>& seen, const std::string& path) {
    if (!seen.insert(path).second) throw SchemaError(path, "given more than once");
  }

  Document parse_form() {
    c_.expect('{');
    std::optional<IntMatrix> m;
    std::string key;
    std::set<std::string> seen;
    while (next_key(key)) {
      const std::string path = "form." + key;
      once(seen, path);
      if (key == "matrix") m = to_matrix(c_.int_rows(), path);
      else throw SchemaError(path, "unknown key");
    }
    if (!m) throw SchemaError("form.matrix", "missing");
    if (!m->is_square()) throw SchemaError("form.matrix", "matrix is not square");
    if (!is_symmetric(*m)) throw Error(ErrorKind::InvariantError, "form.matrix is not symmetric");
    return make_document(std::move(*m));
  }

  Document parse_enhanced() {
    c_.expect('{');
    std::optional<long> dim;
    std::optional<IntMatrix> lambda;
    std::optional<std::vector<Integer>> q;
    std::string key;
    std::set<std::string> seen;
    while (next_key(key)) {
      const std::string path = "enhanced_form." + key;
      once(seen, path);
      if (key == "dim") dim = c_.index();
      else if (key == "lambda") lambda = to_matrix(c_.int_rows(), path);
      else if (key == "q") q = c_.int_list();
      else throw SchemaError(path, "unknown key");
    }
    if (!dim) throw SchemaError("enhanced_form.dim", "missing");
    if (!lambda) throw SchemaError("enhanced_form.lambda", "missing");
    if (!q) throw SchemaError("enhanced_form.q", "missing");
    const auto n = static_cast<std::size_t>(*dim);
    require_shape(*lambda, n, n, "enhanced_form.lambda");
    if (q->size() != n) throw SchemaError("enhanced_form.q", "expected " + std::to_string(n) + " values");
    ModMatrix l(2, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Integer& v = (*lambda)(i, j);
        if (sgn(v) < 0 || v > 1) throw SchemaError(indexed("enhanced_form.lambda", {long(i), long(j)}), "entries must be 0 or 1");
        l.set(i, j, static_cast<int>(v.get_si()));
      }
    Residues qs(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Integer& v = (*q)[i];
      if (sgn(v) < 0 || v > 3) throw SchemaError(indexed("enhanced_form.q", {long(i)}), "values must lie in 0..3");
      qs[i] = static_cast<int>(v.get_si());
    }
    try {
      return make_document(EnhancedForm(std::move(l), std::move(qs)));
    } catch (const Error& e) {
      throw Error(ErrorKind::InvariantError, std::string("enhanced_form: ") + e.what());
    }
  }

  template <class Cells, class ReadCells>
  bool complex_entry(const std::string& kind, const std::string& key, ComplexEntries<Cells>& e,
                     std::set<std::string>& seen, ReadCells read) {
    if (key == "dim") {
      once(seen, kind + ".dim");
      e.dim = c_.index();
    } else if (key == "ranks") {
      once(seen, kind + ".ranks");
      e.ranks = c_.int_list();
    } else if (key == "d") {
      const long r = c_.index();
      const std::string path = indexed(kind + ".d", {r});
      once(seen, path);
      e.d[r] = read();
    } else if (key == "phi") {
      const long s = c_.index();
      const long p = c_.index();
      const std::string path = indexed(kind + ".phi", {s, p});
      once(seen, path);
      e.phi[{s, p}] = read();
    } else {
      return false;
    }
    return true;
  }

  // Checks dim/ranks and places the already converted matrices.
  template <class R, class Cells, class Convert>
  SymmetricStructure<R> assemble(const std::string& kind, const ComplexEntries<Cells>& e, Convert convert) {
    if (!e.dim) throw SchemaError(kind + ".dim", "missing");
    if (!e.ranks) throw SchemaError(kind + ".ranks", "missing");
    const long n = *e.dim;
    if (e.ranks->size() != static_cast<std::size_t>(n) + 1)
      throw SchemaError(kind + ".ranks", "expected " + std::to_string(n + 1) + " ranks for dimension " + std::to_string(n));
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i < e.ranks->size(); ++i) {
      const Integer& r = (*e.ranks)[i];
      if (sgn(r) < 0 || r > 100000) throw SchemaError(indexed(kind + ".ranks", {long(i)}), "rank out of range");
      ranks.push_back(r.get_ui());
    }
    long levels = 0;
    for (const auto& [sp, cells] : e.phi) levels = std::max(levels, sp.first + 1);
    auto out = SymmetricStructure<R>::zero(static_cast<int>(n), ranks, static_cast<std::size_t>(levels));
    for (const auto& [r, cells] : e.d) {
      const std::string path = indexed(kind + ".d", {r});
      if (r < 1 || r > n) throw SchemaError(path, "degree outside 1.." + std::to_string(n));
      Matrix<R> m = convert(cells, path);
      require_shape(m, out.rank(static_cast<int>(r) - 1), out.rank(static_cast<int>(r)), path);
      if (m.rows() == out.rank(static_cast<int>(r) - 1)) out.d[static_cast<std::size_t>(r)] = std::move(m);
    }
    for (const auto& [sp, cells] : e.phi) {
      const auto [s, p] = sp;
      const std::string path = indexed(kind + ".phi", {s, p});
      const long q = n + s - p;
      if (p < 0 || p > n || q < 0 || q > n) throw SchemaError(path, "component lies outside the complex");
      Matrix<R> m = convert(cells, path);
      require_shape(m, out.rank(static_cast<int>(p)), out.rank(static_cast<int>(q)), path);
      if (m.rows() == out.rank(static_cast<int>(p)))
        out.phi[static_cast<std::size_t>(s)][static_cast<std::size_t>(p)] = std::move(m);
    }
    return out;
  }

  static void check_identities(const std::vector<std::string>& issues, const std::string& kind) {
    if (issues.empty()) return;
    std::string msg = kind + ": ";
    for (std::size_t i = 0; i < issues.size(); ++i) msg += (i ? "; " : "") + issues[i];
    throw Error(ErrorKind::InvariantError, msg);
  }

  Document parse_symmetric() {
    const std::string kind = "symmetric_complex";
    c_.expect('{');
    ComplexEntries<Rows> e;
    std::set<std::string> seen;
    std::string key;
    while (next_key(key))
      if (!complex_entry(kind, key, e, seen, [&] { return c_.int_rows(); }))
        throw SchemaError(kind + "." + key, "unknown key");
    auto c = assemble<Integer>(kind, e, [](const Rows& rows, const std::string& path) { return to_matrix(rows, path); });
    check_identities(structure_residuals(c), kind);
    return make_document(std::move(c));
  }

  Document parse_groupring() {
    const std::string kind = "groupring_complex";
    c_.expect('{');
    ComplexEntries<CellRows> e;
    std::optional<std::vector<std::string>> gens;
    std::optional<Presentation> pres;
    std::set<std::string> seen;
    std::string key;
    while (next_key(key)) {
      if (key == "generators") {
        once(seen, kind + ".generators");
        gens = c_.name_list();
      } else if (key == "presentation") {
        once(seen, kind + ".presentation");
        const std::string p = c_.ident();
        if (p == "free") pres = Presentation::free;
        else if (p == "free_abelian") pres = Presentation::free_abelian;
        else throw SchemaError(kind + ".presentation", "expected free or free_abelian, found '" + p + "'");
      } else if (!complex_entry(kind, key, e, seen, [&] { return c_.cell_rows(); })) {
        throw SchemaError(kind + "." + key, "unknown key");
      }
    }
    if (!gens) throw SchemaError(kind + ".generators", "missing");
    if (!pres) throw SchemaError(kind + ".presentation", "missing");
    std::set<std::string> unique(gens->begin(), gens->end());
    if (unique.size() != gens->size()) throw SchemaError(kind + ".generators", "duplicate generator name");

    auto convert = [&](const CellRows& rows, const std::string& path) {
      if (rows.empty()) return GroupRingMatrix(0, 0);
      check_rect(rows, path);
      GroupRingMatrix m(rows.size(), rows.front().size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
          const auto& cell = rows[i][j];
          try {
            m(i, j) = parse_group_ring_element(cell.text, *gens, *pres);
          } catch (const SyntaxError& err) {
            const std::string msg = err.what();
            const auto colon = msg.find(": ", msg.find("column"));
            throw SyntaxError(cell.at.line, cell.at.col + err.column() - 1,
                              colon == std::string::npos ? msg : msg.substr(colon + 2));
          }
        }
      return m;
    };
    GroupRingComplex g;
    g.generators = *gens;
    g.presentation = *pres;
    g.data = assemble<GroupRingElement>(kind, e, convert);
    check_identities(group_ring_residuals(g), kind);
    return make_document(std::move(g));
  }

  Document parse_rep() {
    const std::string kind = "representation";
    c_.expect('{');
    Representation rep;
    std::optional<long> m;
    std::optional<IntMatrix> alpha;
    std::set<std::string> seen;
    std::string key;
    while (next_key(key)) {
      if (key == "m") {
        once(seen, kind + ".m");
        m = c_.index();
      } else if (key == "alpha") {
        once(seen, kind + ".alpha");
        alpha = to_matrix(c_.int_rows(), kind + ".alpha");
      } else if (key == "image") {
        const std::string name = c_.ident();
        const std::string path = kind + ".image." + name;
        once(seen, path);
        rep.names.push_back(name);
        rep.images.push_back(to_matrix(c_.int_rows(), path));
      } else {
        throw SchemaError(kind + "." + key, "unknown key");
      }
    }
    if (!m) throw SchemaError(kind + ".m", "missing");
    if (!alpha) throw SchemaError(kind + ".alpha", "missing");
    rep.m = static_cast<int>(*m);
    rep.alpha = std::move(*alpha);
    for (std::size_t i = 0; i < rep.images.size(); ++i)
      require_shape(rep.images[i], rep.a_rank(), rep.a_rank(), kind + ".image." + rep.names[i]);
    try {
      validate(rep);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvariantError, std::string("representation: ") + e.what());
    }
    return make_document(std::move(rep));
  }

  Cursor c_;
};

}  // namespace

Document parse_document(const std::string& text) { return DocumentParser(text).parse(); }

std::string emit(const Document& d) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntMatrix>) return form_document(v);
        else return to_document(v);
      },
      d.value);
}

Document make_document(IntMatrix form) { return {DocumentKind::form, std::move(form)}; }
Document make_document(EnhancedForm form) { return {DocumentKind::enhanced_form, std::move(form)}; }
Document make_document(SymmetricComplex complex) {
  return {DocumentKind::symmetric_complex, std::move(complex)};
}
Document make_document(GroupRingComplex complex) {
  return {DocumentKind::groupring_complex, std::move(complex)};
}
Document make_document(Representation rep) { return {DocumentKind::representation, std::move(rep)}; }

}  // namespace sigma8
