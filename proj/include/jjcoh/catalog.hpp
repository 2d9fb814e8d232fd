#pragma once

#include "algebra.hpp"
#include "structures.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jjcoh {

struct unknown_catalog_entry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    std::string name;
    Algebra algebra;
    std::optional<BilinearForm> form; // referenced as "<name>.B"
    std::string note;
};

inline const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;

        Algebra j4(4);
        j4.set_product(0, 0, basis_vector(4, 1)); // e1 e1 = e2
        j4.set_product(0, 2, basis_vector(4, 3)); // e1 e3 = e4
        BilinearForm b(4, 4);
        b(0, 3) = b(3, 0) = 1;
        b(1, 2) = b(2, 1) = 1;
        v.push_back({"J4", j4, b,
                     "4-dimensional nilpotent algebra with e1*e1 = e2, e1*e3 = e4; "
                     "the form B (B(e1,e4) = B(e2,e3) = 1) makes it pseudo-Euclidean"});

        Algebra a12(4, {"u1", "u2", "u3", "u4"});
        a12.set_product(0, 0, basis_vector(4, 1)); // u1 u1 = u2
        a12.set_product(2, 2, basis_vector(4, 3)); // u3 u3 = u4
        v.push_back({"A12A12", a12, std::nullopt,
                     "direct sum of two copies of the 2-dimensional algebra with u*u = v"});

        for (const CatalogEntry& e : v)
            if (!validate_jacobi_jordan(e.algebra).ok())
                throw std::logic_error("catalog entry " + e.name + " failed validation");
        return v;
    }();
    return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name)
{
    for (const CatalogEntry& e : catalog())
        if (e.name == name)
            return e;
    throw unknown_catalog_entry("no catalog entry named '" + name + "'");
}

// Resolves "NAME" to the algebra and "NAME.B" to the attached form.
inline BilinearForm catalog_form(const std::string& ref)
{
    auto dot = ref.rfind('.');
    if (dot == std::string::npos || ref.substr(dot + 1) != "B")
        throw unknown_catalog_entry("catalog form references look like '<entry>.B'");
    const CatalogEntry& e = catalog_entry(ref.substr(0, dot));
    if (!e.form)
        throw unknown_catalog_entry("catalog entry '" + e.name + "' has no attached form");
    return *e.form;
}

} // namespace jjcoh
