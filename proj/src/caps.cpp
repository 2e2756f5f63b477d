#include "lindq/caps.hpp"

#include <cstdlib>
#include <string>

namespace lindq {

const Caps& default_caps()
{
    static const Caps caps = caps_from_env();
    return caps;
}

Caps caps_from_env(Caps base)
{
    auto apply = [](const char* name, auto& field) {
        if (const char* s = std::getenv(name)) {
            try {
                field = static_cast<std::remove_reference_t<decltype(field)>>(std::stoll(s));
            } catch (const std::exception&) {
                // ignore malformed values
            }
        }
    };
    apply("LINDQ_CAP_CLIQUE", base.clique_max_n);
    apply("LINDQ_CAP_SUBSET", base.subset_max_n);
    apply("LINDQ_CAP_CORE", base.core_max_n);
    apply("LINDQ_CAP_ISO", base.iso_max_n);
    apply("LINDQ_CAP_HOM_SOURCE", base.hom_max_source);
    apply("LINDQ_CAP_HOM_TARGET", base.hom_max_target);
    apply("LINDQ_CAP_HKQ", base.hkq_max_vertices);
    if (const char* s = std::getenv("LINDQ_CAP_MINRANK")) {
        try {
            base.minrank_max_m = std::stoi(s);
        } catch (const std::exception&) {
        }
    }
    return base;
}

int minrank_cap(int q, const Caps& caps)
{
    if (caps.minrank_max_m)
        return *caps.minrank_max_m;
    switch (q) {
    case 2:
        return 6;
    case 3:
        return 5;
    case 4:
    case 5:
        return 4;
    default:
        return 3;
    }
}

}  // namespace lindq
