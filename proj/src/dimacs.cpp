#include "achsat/dimacs.hpp"

#include "achsat/error.hpp"

#include <fstream>
#include <sstream>

namespace achsat {

Formula read_dimacs(std::istream& in, std::optional<std::uint32_t> width_if_empty)
{
    std::string line;
    std::int64_t n = -1, m = -1;
    std::vector<std::vector<Literal>> clauses;
    std::vector<Literal> current;

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c' || first[0] == '%')
            continue;
        if (first == "p") {
            std::string fmt;
            if (n >= 0)
                throw ParseError("duplicate problem line");
            if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
                throw ParseError("malformed problem line: " + line);
            continue;
        }
        if (n < 0)
            throw ParseError("clause before problem line");
        ls.clear();
        ls.str(line);
        std::int64_t x;
        while (ls >> x) {
            if (x == 0) {
                clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (x > n || -x > n)
                throw ParseError("literal " + std::to_string(x) + " exceeds declared variable count");
            current.push_back(Literal::from_dimacs(x));
        }
        if (!ls.eof())
            throw ParseError("unexpected token in line: " + line);
    }
    if (n < 0)
        throw ParseError("missing problem line");
    if (!current.empty())
        throw ParseError("last clause is not 0-terminated");
    if (static_cast<std::int64_t>(clauses.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " clauses, found " +
                         std::to_string(clauses.size()));

    std::uint32_t k = clauses.empty() ? width_if_empty.value_or(1)
                                      : static_cast<std::uint32_t>(clauses.front().size());
    if (k == 0)
        throw ParseError("empty clause");
    try {
        Formula f(static_cast<std::uint32_t>(n), k);
        f.reserve(clauses.size());
        for (const auto& c : clauses)
            f.add(c);
        return f;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid clause set: ") + e.what());
    }
}

Formula read_dimacs_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, FormulaView f, const std::vector<std::string>& comments)
{
    for (const auto& c : comments)
        out << "c " << c << '\n';
    out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
    for (std::size_t i = 0; i < f.num_clauses(); ++i) {
        for (Literal l : f.clause(i))
            out << l.to_dimacs() << ' ';
        out << "0\n";
    }
}

void write_dimacs_file(const std::string& path, FormulaView f, const std::vector<std::string>& comments)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    write_dimacs(out, f, comments);
}

} // namespace achsat
