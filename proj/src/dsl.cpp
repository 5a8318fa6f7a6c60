#include "fincat/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "fincat/limits.hpp"

namespace fincat::dsl {

std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::lexical: return "lexical";
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::resolution: return "resolution";
  }
  return "?";
}

std::string ParseError::to_string() const {
  std::string s = "line " + std::to_string(line) + ", column " + std::to_string(column) +
                  ": " + std::string(dsl::to_string(kind)) + " error E" + std::to_string(code) +
                  ": " + message;
  if (!expected.empty()) s += " (expected " + expected + ")";
  return s;
}

std::string_view kind_name(const Declaration& d) {
  static constexpr std::string_view names[] = {"category", "finset",  "map",
                                               "diagram",  "functor", "nattrans"};
  return names[d.index()];
}

const std::string& decl_name(const Declaration& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

namespace {

bool ident_start(unsigned char c) { return std::isalnum(c) || c == '_'; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; }

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (ident_char(c)) continue;
    if (c == '-' && i + 1 < s.size() && std::isalpha(static_cast<unsigned char>(s[i + 1])))
      continue;
    return false;
  }
  return true;
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { ident, lbrace, rbrace, semi, comma, colon, arrow, darrow, dot, equals, end };

std::string describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::semi: return "';'";
    case Tok::comma: return "','";
    case Tok::colon: return "':'";
    case Tok::arrow: return "'->'";
    case Tok::darrow: return "'=>'";
    case Tok::dot: return "'.'";
    case Tok::equals: return "'='";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

[[noreturn]] void fail(ErrorKind kind, int code, std::size_t line, std::size_t column,
                       std::string message, std::string expected = {}) {
  throw ParseFailure(ParseError{kind, code, line, column, std::move(message), std::move(expected)});
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    const auto c = static_cast<unsigned char>(text_[pos_]);
    auto single = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, static_cast<char>(c));
      advance();
      return t;
    };
    switch (c) {
      case '{': return single(Tok::lbrace);
      case '}': return single(Tok::rbrace);
      case ';': return single(Tok::semi);
      case ',': return single(Tok::comma);
      case ':': return single(Tok::colon);
      case '.': return single(Tok::dot);
      case '-':
        if (peek(1) == '>') {
          advance();
          advance();
          t.kind = Tok::arrow;
          t.text = "->";
          return t;
        }
        fail(ErrorKind::lexical, code::incomplete_arrow, t.line, t.column,
             "'-' must start '->'", "'->'");
      case '=':
        if (peek(1) == '>') {
          advance();
          advance();
          t.kind = Tok::darrow;
          t.text = "=>";
          return t;
        }
        return single(Tok::equals);
      default: break;
    }
    if (ident_start(c)) {
      t.kind = Tok::ident;
      const auto start = pos_;
      advance();
      while (pos_ < text_.size()) {
        const auto d = static_cast<unsigned char>(text_[pos_]);
        if (ident_char(d) || (d == '-' && std::isalpha(static_cast<unsigned char>(peek(1))))) {
          advance();
          continue;
        }
        break;
      }
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    std::string shown;
    if (c >= 0x20 && c < 0x7f) {
      shown = std::string("'") + static_cast<char>(c) + "'";
    } else {
      static const char* hex = "0123456789abcdef";
      shown = std::string("byte 0x") + hex[c >> 4] + hex[c & 15];
    }
    fail(ErrorKind::lexical, code::unexpected_character, t.line, t.column,
         "unexpected character " + shown);
  }

 private:
  char peek(std::size_t k) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// ---------------------------------------------------------------------------
// Symbols used for resolution while parsing

struct CatSym {
  std::set<std::string> objects;
  std::map<std::string, std::pair<std::string, std::string>> arrows;  // incl. identities
  std::vector<std::string> object_order;
  std::vector<std::string> arrow_order;  // non-identity arrows
};

struct FunctorSym {
  std::string source, target;
};

CatSym shape_symbols(Shape s) {
  CatSym sym;
  auto cat = build_shape(s);
  for (auto x : cat->objects()) {
    sym.objects.insert(cat->object_label(x));
    sym.object_order.push_back(cat->object_label(x));
  }
  for (auto a : cat->arrows()) {
    sym.arrows[cat->arrow_label(a)] = {cat->object_label(cat->dom(a)),
                                       cat->object_label(cat->cod(a))};
    if (!cat->is_identity(a)) sym.arrow_order.push_back(cat->arrow_label(a));
  }
  return sym;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  SpecDocument parse() {
    SpecDocument doc;
    while (tok_.kind != Tok::end) doc.declarations.push_back(declaration());
    return doc;
  }

 private:
  // --- token helpers ---

  [[noreturn]] void unexpected(const std::string& expected) {
    if (tok_.kind == Tok::end)
      fail(ErrorKind::syntax, code::unexpected_end, tok_.line, tok_.column,
           "unexpected end of input", expected);
    fail(ErrorKind::syntax, code::unexpected_token, tok_.line, tok_.column,
         "unexpected " + describe(tok_.kind) +
             (tok_.kind == Tok::ident ? " '" + tok_.text + "'" : std::string()),
         expected);
  }

  Token take(Tok kind) {
    if (tok_.kind != kind) unexpected(describe(kind));
    Token t = std::move(tok_);
    tok_ = lex_.next();
    return t;
  }

  bool accept(Tok kind) {
    if (tok_.kind != kind) return false;
    tok_ = lex_.next();
    return true;
  }

  bool at_keyword(std::string_view kw) const { return tok_.kind == Tok::ident && tok_.text == kw; }

  [[noreturn]] static void resolution(int code, const Token& at, std::string message) {
    fail(ErrorKind::resolution, code, at.line, at.column,
         std::move(message) + " (line " + std::to_string(at.line) + ")");
  }

  void declare_global(const Token& name, std::string kind) {
    auto [it, fresh] = globals_.emplace(name.text, kind);
    if (!fresh)
      resolution(code::duplicate, name,
                 "name '" + name.text + "' is already declared as a " + it->second);
  }

  void require_global(const Token& name, std::string_view kind) {
    auto it = globals_.find(name.text);
    if (it == globals_.end())
      resolution(code::undeclared, name, std::string(kind) + " '" + name.text + "' is not declared");
    if (it->second != kind)
      resolution(code::kind_mismatch, name,
                 "'" + name.text + "' is a " + it->second + ", not a " + std::string(kind));
  }

  // --- declarations ---

  Declaration declaration() {
    if (at_keyword("category")) return category();
    if (at_keyword("finset")) return finset();
    if (at_keyword("map")) return map();
    if (at_keyword("diagram")) return bound_functor(true);
    if (at_keyword("functor")) return bound_functor(false);
    if (at_keyword("nattrans")) return nattrans();
    unexpected("category, finset, map, diagram, functor or nattrans");
  }

  CategoryDecl category() {
    take(Tok::ident);
    const auto name = take(Tok::ident);
    declare_global(name, "category");
    CategoryDecl d;
    d.name = name.text;
    CatSym sym;
    std::set<std::pair<std::string, std::string>> composed;
    take(Tok::lbrace);
    while (!accept(Tok::rbrace)) {
      if (at_keyword("object")) {
        take(Tok::ident);
        do {
          const auto obj = take(Tok::ident);
          const auto id = "id_" + obj.text;
          if (sym.objects.contains(obj.text) || sym.arrows.contains(obj.text))
            resolution(code::duplicate, obj,
                       "'" + obj.text + "' is already declared in category " + d.name);
          if (sym.arrows.contains(id) || sym.objects.contains(id))
            resolution(code::duplicate, obj,
                       "identity '" + id + "' of object '" + obj.text + "' clashes with a declared name");
          sym.objects.insert(obj.text);
          sym.arrows[id] = {obj.text, obj.text};
          d.objects.push_back(obj.text);
        } while (accept(Tok::comma));
        take(Tok::semi);
      } else if (at_keyword("arrow")) {
        take(Tok::ident);
        const auto arrow = take(Tok::ident);
        take(Tok::colon);
        const auto dom = take(Tok::ident);
        take(Tok::arrow);
        const auto cod = take(Tok::ident);
        take(Tok::semi);
        if (sym.arrows.contains(arrow.text) || sym.objects.contains(arrow.text))
          resolution(code::duplicate, arrow,
                     "'" + arrow.text + "' is already declared in category " + d.name);
        for (const auto* end : {&dom, &cod})
          if (!sym.objects.contains(end->text))
            resolution(code::undeclared, *end,
                       "object '" + end->text + "' is not declared in category " + d.name);
        sym.arrows[arrow.text] = {dom.text, cod.text};
        d.arrows.push_back({arrow.text, dom.text, cod.text});
      } else if (at_keyword("compose")) {
        const auto at = take(Tok::ident);
        const auto g = take(Tok::ident);
        take(Tok::dot);
        const auto f = take(Tok::ident);
        take(Tok::equals);
        const auto h = take(Tok::ident);
        take(Tok::semi);
        for (const auto* a : {&g, &f, &h})
          if (!sym.arrows.contains(a->text))
            resolution(code::undeclared, *a,
                       "arrow '" + a->text + "' is not declared in category " + d.name);
        if (!composed.emplace(g.text, f.text).second)
          resolution(code::duplicate, at,
                     "composite " + g.text + " . " + f.text + " is already given");
        d.compositions.push_back({g.text, f.text, h.text});
      } else {
        unexpected("object, arrow, compose or '}'");
      }
    }
    categories_[d.name] = std::move(sym);
    return d;
  }

  FinsetDecl finset() {
    take(Tok::ident);
    const auto name = take(Tok::ident);
    declare_global(name, "finset");
    FinsetDecl d;
    d.name = name.text;
    take(Tok::equals);
    take(Tok::lbrace);
    std::set<std::string> seen;
    if (tok_.kind != Tok::rbrace) {
      do {
        const auto e = take(Tok::ident);
        if (!seen.insert(e.text).second)
          resolution(code::duplicate, e, "element '" + e.text + "' repeated in finset " + d.name);
        d.elements.push_back(e.text);
      } while (accept(Tok::comma));
    }
    take(Tok::rbrace);
    finsets_[d.name] = d.elements;
    return d;
  }

  MapDecl map() {
    take(Tok::ident);
    const auto name = take(Tok::ident);
    declare_global(name, "map");
    MapDecl d;
    d.name = name.text;
    take(Tok::colon);
    const auto dom = take(Tok::ident);
    require_global(dom, "finset");
    take(Tok::arrow);
    const auto cod = take(Tok::ident);
    require_global(cod, "finset");
    d.dom = dom.text;
    d.cod = cod.text;
    const auto& from = finsets_.at(d.dom);
    const auto& to = finsets_.at(d.cod);
    take(Tok::lbrace);
    std::set<std::string> bound;
    while (tok_.kind != Tok::rbrace) {
      const auto x = take(Tok::ident);
      take(Tok::arrow);
      const auto y = take(Tok::ident);
      take(Tok::semi);
      if (std::find(from.begin(), from.end(), x.text) == from.end())
        resolution(code::undeclared, x, "'" + x.text + "' is not an element of " + d.dom);
      if (std::find(to.begin(), to.end(), y.text) == to.end())
        resolution(code::undeclared, y, "'" + y.text + "' is not an element of " + d.cod);
      if (!bound.insert(x.text).second)
        resolution(code::duplicate, x, "element '" + x.text + "' mapped twice in map " + d.name);
      d.entries.emplace_back(x.text, y.text);
    }
    const auto close = take(Tok::rbrace);
    for (const auto& e : from)
      if (!bound.contains(e))
        resolution(code::incomplete, close,
                   "map " + d.name + " is not total: element '" + e + "' is not mapped");
    return d;
  }

  // `diagram` and `functor` share one body grammar.
  Declaration bound_functor(bool diagram) {
    take(Tok::ident);
    const auto name = take(Tok::ident);
    declare_global(name, diagram ? "diagram" : "functor");
    take(Tok::colon);
    const auto source = take(Tok::ident);
    const CatSym* src = nullptr;
    CatSym builtin;
    if (diagram) {
      auto it = globals_.find(source.text);
      if (it != globals_.end() && it->second == "category") {
        src = &categories_.at(source.text);
      } else if (auto shape = parse_shape(source.text); shape && it == globals_.end()) {
        builtin = shape_symbols(*shape);
        src = &builtin;
      } else {
        require_global(source, "category");
      }
    } else {
      require_global(source, "category");
      src = &categories_.at(source.text);
    }
    take(Tok::arrow);
    const auto target = take(Tok::ident);
    require_global(target, "category");
    const auto& tgt = categories_.at(target.text);

    take(Tok::lbrace);
    std::vector<Binding> bindings;
    std::set<std::string> bound;
    while (tok_.kind != Tok::rbrace) {
      const auto x = take(Tok::ident);
      take(Tok::arrow);
      const auto y = take(Tok::ident);
      take(Tok::semi);
      const bool x_obj = src->objects.contains(x.text);
      const bool x_arrow = src->arrows.contains(x.text);
      if (!x_obj && !x_arrow)
        resolution(code::undeclared, x,
                   "'" + x.text + "' is not an object or arrow of " + source.text);
      const bool y_obj = tgt.objects.contains(y.text);
      const bool y_arrow = tgt.arrows.contains(y.text);
      if (!y_obj && !y_arrow)
        resolution(code::undeclared, y,
                   "'" + y.text + "' is not an object or arrow of " + target.text);
      if (x_obj != y_obj)
        resolution(code::kind_mismatch, y,
                   std::string(x_obj ? "object" : "arrow") + " '" + x.text + "' is bound to " +
                       (y_obj ? "object" : "arrow") + " '" + y.text + "'");
      if (!bound.insert(x.text).second)
        resolution(code::duplicate, x, "'" + x.text + "' is bound twice");
      bindings.emplace_back(x.text, y.text);
    }
    const auto close = take(Tok::rbrace);
    for (const auto& o : src->object_order)
      if (!bound.contains(o))
        resolution(code::incomplete, close, "object '" + o + "' of " + source.text + " is not mapped");
    for (const auto& a : src->arrow_order)
      if (!bound.contains(a))
        resolution(code::incomplete, close, "arrow '" + a + "' of " + source.text + " is not mapped");

    if (diagram) return DiagramDecl{name.text, source.text, target.text, std::move(bindings)};
    functors_[name.text] = FunctorSym{source.text, target.text};
    return FunctorDecl{name.text, source.text, target.text, std::move(bindings)};
  }

  NatTransDecl nattrans() {
    take(Tok::ident);
    const auto name = take(Tok::ident);
    declare_global(name, "nattrans");
    take(Tok::colon);
    const auto from = take(Tok::ident);
    require_global(from, "functor");
    take(Tok::darrow);
    const auto to = take(Tok::ident);
    require_global(to, "functor");
    const auto& f = functors_.at(from.text);
    const auto& g = functors_.at(to.text);
    if (f.source != g.source || f.target != g.target)
      resolution(code::kind_mismatch, to,
                 "functors " + from.text + " and " + to.text + " are not parallel");
    const auto& src = categories_.at(f.source);
    const auto& tgt = categories_.at(f.target);
    take(Tok::lbrace);
    NatTransDecl d{name.text, from.text, to.text, {}};
    std::set<std::string> bound;
    while (tok_.kind != Tok::rbrace) {
      const auto x = take(Tok::ident);
      take(Tok::arrow);
      const auto y = take(Tok::ident);
      take(Tok::semi);
      if (!src.objects.contains(x.text)) {
        if (src.arrows.contains(x.text))
          resolution(code::kind_mismatch, x, "'" + x.text + "' is an arrow; components are indexed by objects");
        resolution(code::undeclared, x, "'" + x.text + "' is not an object of " + f.source);
      }
      if (!tgt.arrows.contains(y.text)) {
        if (tgt.objects.contains(y.text))
          resolution(code::kind_mismatch, y, "'" + y.text + "' is an object; components are arrows");
        resolution(code::undeclared, y, "'" + y.text + "' is not an arrow of " + f.target);
      }
      if (!bound.insert(x.text).second)
        resolution(code::duplicate, x, "component at '" + x.text + "' given twice");
      d.components.emplace_back(x.text, y.text);
    }
    const auto close = take(Tok::rbrace);
    for (const auto& o : src.object_order)
      if (!bound.contains(o))
        resolution(code::incomplete, close, "component at object '" + o + "' is missing");
    return d;
  }

  Lexer lex_;
  Token tok_;
  std::map<std::string, std::string> globals_;
  std::map<std::string, CatSym> categories_;
  std::map<std::string, std::vector<std::string>> finsets_;
  std::map<std::string, FunctorSym> functors_;
};

}  // namespace

SpecDocument parse_spec(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Formatting

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string bindings_body(const std::vector<Binding>& bs) {
  if (bs.empty()) return "{ }";
  std::string out = "{";
  for (const auto& [x, y] : bs) out += " " + x + " -> " + y + ";";
  return out + " }";
}

struct Formatter {
  std::string operator()(const CategoryDecl& d) const {
    std::string out = "category " + d.name + " {\n";
    if (!d.objects.empty()) out += "  object " + join(d.objects, ", ") + ";\n";
    for (const auto& a : d.arrows) out += "  arrow " + a.name + " : " + a.dom + " -> " + a.cod + ";\n";
    for (const auto& c : d.compositions)
      out += "  compose " + c.g + " . " + c.f + " = " + c.h + ";\n";
    return out + "}\n";
  }
  std::string operator()(const FinsetDecl& d) const {
    if (d.elements.empty()) return "finset " + d.name + " = { }\n";
    return "finset " + d.name + " = { " + join(d.elements, ", ") + " }\n";
  }
  std::string operator()(const MapDecl& d) const {
    return "map " + d.name + " : " + d.dom + " -> " + d.cod + " " + bindings_body(d.entries) + "\n";
  }
  std::string operator()(const DiagramDecl& d) const {
    return "diagram " + d.name + " : " + d.shape + " -> " + d.target + " " +
           bindings_body(d.bindings) + "\n";
  }
  std::string operator()(const FunctorDecl& d) const {
    return "functor " + d.name + " : " + d.source + " -> " + d.target + " " +
           bindings_body(d.bindings) + "\n";
  }
  std::string operator()(const NatTransDecl& d) const {
    return "nattrans " + d.name + " : " + d.from + " => " + d.to + " " +
           bindings_body(d.components) + "\n";
  }
};

}  // namespace

std::string format_spec(const SpecDocument& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.declarations.size(); ++i) {
    if (i) out += "\n";
    out += std::visit(Formatter{}, doc.declarations[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Workspace

namespace {

template <typename M>
const auto& lookup(const M& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) throw StructuralError(std::string(kind) + " '" + name + "' is not declared");
  return it->second;
}

CategoryPtr build_category(const CategoryDecl& d) {
  CategoryBuilder b;
  std::map<std::string, ObjectId> objects;
  std::map<std::string, ArrowId> arrows;
  for (const auto& o : d.objects) objects[o] = b.add_object(o);
  for (const auto& o : d.objects) arrows["id_" + o] = b.add_identity(objects.at(o));
  for (const auto& a : d.arrows)
    arrows[a.name] = b.add_arrow(lookup(objects, a.dom, "object"), lookup(objects, a.cod, "object"), a.name);
  for (const auto& c : d.compositions)
    b.set_composite(lookup(arrows, c.g, "arrow"), lookup(arrows, c.f, "arrow"),
                    lookup(arrows, c.h, "arrow"));
  b.fill_identity_composites();
  return std::make_shared<const Category>(b.build());
}

Functor build_bound(CategoryPtr source, CategoryPtr target, const std::vector<Binding>& bindings) {
  std::vector<ObjectId> objects(source->object_count(), ObjectId{UINT32_MAX});
  std::vector<std::pair<ArrowId, ArrowId>> arrows;
  for (const auto& [x, y] : bindings) {
    if (auto o = source->find_object(x)) {
      auto t = target->find_object(y);
      if (!t) throw StructuralError("object '" + y + "' is not in the target");
      objects[o->index] = *t;
    } else if (auto a = source->find_arrow(x)) {
      auto t = target->find_arrow(y);
      if (!t) throw StructuralError("arrow '" + y + "' is not in the target");
      arrows.emplace_back(*a, *t);
    } else {
      throw StructuralError("'" + x + "' is not in the source");
    }
  }
  for (auto o : objects)
    if (o.index == UINT32_MAX) throw ContractError("functor leaves an object unmapped");
  return make_functor(std::move(source), std::move(target), std::move(objects), arrows);
}

}  // namespace

Workspace build_workspace(const SpecDocument& doc) {
  Workspace w;
  for (const auto& decl : doc.declarations) {
    if (const auto* c = std::get_if<CategoryDecl>(&decl)) {
      w.categories[c->name] = build_category(*c);
    } else if (const auto* s = std::get_if<FinsetDecl>(&decl)) {
      w.finsets[s->name] = FinSetObject::labelled(s->elements);
    } else if (const auto* m = std::get_if<MapDecl>(&decl)) {
      const auto& dom = lookup(w.finsets, m->dom, "finset");
      const auto& cod = lookup(w.finsets, m->cod, "finset");
      std::vector<std::size_t> table(dom.size, SIZE_MAX);
      for (const auto& [x, y] : m->entries) {
        auto xi = std::find(dom.labels.begin(), dom.labels.end(), x);
        auto yi = std::find(cod.labels.begin(), cod.labels.end(), y);
        if (xi == dom.labels.end() || yi == cod.labels.end())
          throw StructuralError("map " + m->name + " refers to a missing element");
        table[static_cast<std::size_t>(xi - dom.labels.begin())] =
            static_cast<std::size_t>(yi - cod.labels.begin());
      }
      w.maps[m->name] = FinSetArrow::make(dom, cod, std::move(table));
    } else if (const auto* d = std::get_if<DiagramDecl>(&decl)) {
      CategoryPtr shape;
      if (auto it = w.categories.find(d->shape); it != w.categories.end()) {
        shape = it->second;
      } else if (auto s = parse_shape(d->shape)) {
        shape = build_shape(*s);
      } else {
        throw StructuralError("shape '" + d->shape + "' is not declared");
      }
      w.diagrams.insert_or_assign(
          d->name, build_bound(shape, lookup(w.categories, d->target, "category"), d->bindings));
    } else if (const auto* f = std::get_if<FunctorDecl>(&decl)) {
      w.functors.insert_or_assign(
          f->name, build_bound(lookup(w.categories, f->source, "category"),
                               lookup(w.categories, f->target, "category"), f->bindings));
    } else if (const auto* n = std::get_if<NatTransDecl>(&decl)) {
      const auto& from = lookup(w.functors, n->from, "functor");
      const auto& to = lookup(w.functors, n->to, "functor");
      NatTrans eta{from, to, std::vector<ArrowId>(from.source->object_count(), ArrowId{UINT32_MAX})};
      for (const auto& [x, y] : n->components) {
        auto o = from.source->find_object(x);
        auto a = from.target->find_arrow(y);
        if (!o || !a) throw StructuralError("nattrans " + n->name + " refers to a missing id");
        eta.components[o->index] = *a;
      }
      for (auto c : eta.components)
        if (c.index == UINT32_MAX) throw ContractError("nattrans " + n->name + " misses a component");
      w.nattrans.insert_or_assign(n->name, std::move(eta));
    }
  }
  return w;
}

std::string export_category(std::string_view name, const Category& cat,
                            const std::vector<std::string>& comments) {
  if (!is_identifier(name)) throw ContractError("'" + std::string(name) + "' is not an identifier");
  for (auto x : cat.objects()) {
    const auto& l = cat.object_label(x);
    if (!is_identifier(l)) throw ContractError("object label '" + l + "' is not an identifier");
    auto id = cat.identity_of(x);
    if (!id || cat.arrow_label(*id) != "id_" + l)
      throw ContractError("identity of '" + l + "' is not labelled id_" + l);
  }
  for (auto a : cat.arrows())
    if (!is_identifier(cat.arrow_label(a)))
      throw ContractError("arrow label '" + cat.arrow_label(a) + "' is not an identifier");

  std::string out;
  for (const auto& c : comments) out += "// " + c + "\n";
  CategoryDecl d;
  d.name = std::string(name);
  for (auto x : cat.objects()) d.objects.push_back(cat.object_label(x));
  for (auto a : cat.arrows()) {
    if (cat.is_identity(a)) continue;
    d.arrows.push_back({cat.arrow_label(a), cat.object_label(cat.dom(a)), cat.object_label(cat.cod(a))});
  }
  for (auto f : cat.arrows()) {
    if (cat.is_identity(f)) continue;
    for (auto x : cat.objects()) {
      for (auto g : cat.hom(cat.cod(f), x)) {
        if (cat.is_identity(g)) continue;
        auto h = cat.entry(g, f);
        if (!h) continue;
        d.compositions.push_back({cat.arrow_label(g), cat.arrow_label(f), cat.arrow_label(*h)});
      }
    }
  }
  return out + Formatter{}(d);
}

}  // namespace fincat::dsl
