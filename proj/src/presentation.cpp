#include "refmon/presentation.hpp"

#include <sstream>

#include "refmon/exception.hpp"
#include "text.hpp"

namespace refmon {

  Presentation::Presentation(std::string name, GeneratorSet gens)
      : _name(std::move(name)), _gens(std::move(gens)) {}

  bool Presentation::addRelation(Word lhs, Word rhs) {
    if (lhs.arity() != arity() || rhs.arity() != arity()) {
      throw Error("relation over the wrong generator set");
    }
    if (rawEqual(lhs, rhs)) {
      return false;
    }
    _relations.push_back({std::move(lhs), std::move(rhs)});
    return true;
  }

  bool Presentation::addRelation(std::string_view lhs, std::string_view rhs) {
    return addRelation(word(lhs), word(rhs));
  }

  std::string Presentation::relationString(std::size_t i) const {
    auto const& r = _relations.at(i);
    return toString(r.lhs, _gens) + " = " + toString(r.rhs, _gens);
  }

  bool operator==(Presentation const& a, Presentation const& b) {
    if (a._name != b._name || !(a._gens == b._gens)
        || a._relations.size() != b._relations.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a._relations.size(); ++i) {
      if (!rawEqual(a._relations[i].lhs, b._relations[i].lhs)
          || !rawEqual(a._relations[i].rhs, b._relations[i].rhs)) {
        return false;
      }
    }
    return true;
  }

  Presentation parsePresentation(std::string_view text) {
    std::optional<std::string> name;
    GeneratorSet               gens;
    struct PendingRelation {
      std::size_t line;
      std::string lhs, rhs;
    };
    std::vector<PendingRelation> pending;

    detail::forEachLine(text, [&](std::size_t lineno, std::string_view line) {
      auto tokens = detail::split(line);
      auto kw     = tokens.front();
      if (kw == "monoid") {
        if (tokens.size() != 2 || !is_identifier(tokens[1])) {
          throw ParseError(lineno, "expected 'monoid <name>'");
        }
        if (name) {
          throw ParseError(lineno, "second 'monoid' line");
        }
        name = std::string(tokens[1]);
      } else if (kw == "generators") {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          if (!is_identifier(tokens[i])) {
            throw ParseError(lineno,
                             "invalid generator name '"
                                 + std::string(tokens[i]) + "'");
          }
          if (gens.find(tokens[i])) {
            throw ParseError(lineno,
                             "duplicate generator '" + std::string(tokens[i])
                                 + "'");
          }
          gens.add(std::string(tokens[i]));
        }
      } else if (kw == "relation") {
        auto rest = detail::trim(line.substr(line.find("relation") + 8));
        auto eq   = rest.find('=');
        if (eq == std::string_view::npos
            || rest.find('=', eq + 1) != std::string_view::npos) {
          throw ParseError(lineno, "expected 'relation <term> = <term>'");
        }
        pending.push_back({lineno,
                           std::string(detail::trim(rest.substr(0, eq))),
                           std::string(detail::trim(rest.substr(eq + 1)))});
      } else {
        throw ParseError(lineno, "unknown keyword '" + std::string(kw) + "'");
      }
    });

    if (!name) {
      throw ParseError(1, "missing 'monoid <name>' line");
    }
    Presentation p(*name, std::move(gens));
    for (auto const& r : pending) {
      try {
        p.addRelation(r.lhs, r.rhs);
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(r.line, e.what());
      }
    }
    return p;
  }

  std::string writePresentation(Presentation const& p) {
    std::ostringstream out;
    out << "monoid " << p.name() << "\n";
    out << "generators";
    for (auto const& g : p.generators().names()) {
      out << " " << g;
    }
    out << "\n";
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
      out << "relation " << p.relationString(i) << "\n";
    }
    return out.str();
  }

}  // namespace refmon
