#include "gptd/construction.hpp"

#include <stdexcept>
#include <string>

namespace gptd {

Rat epsilon(int n) {
    if (n < 2) throw std::invalid_argument("epsilon: requires n >= 2");
    return Rat(1, 3L * n * n);
}

RPoint ruin_point(const IndexSubset& circuit, int j, int n) {
    if (circuit.ground_size() != n) {
        throw std::invalid_argument("ruin_point: circuit ground set does not match n");
    }
    if (!circuit.contains(j)) {
        throw std::invalid_argument("ruin_point: element " + std::to_string(j) +
                                    " not in " + circuit.str());
    }
    const int m = circuit.size();
    if (m < 2) throw std::invalid_argument("ruin_point: circuit must have >= 2 elements");

    const Rat eps = epsilon(n);
    std::vector<Rat> coords(static_cast<std::size_t>(n), Rat(0));
    if (m == n) {
        // Full ground set: -eps on j, (1+eps)/(n-1) everywhere else.
        const Rat other = (Rat(1) + eps) / Rat(n - 1);
        for (int k = 1; k <= n; ++k) {
            coords[static_cast<std::size_t>(k - 1)] = (k == j) ? -eps : other;
        }
    } else {
        // Proper subset: -2eps on j, (1 - eps(m-2))/(m-1) on the rest of
        // the circuit, eps*m/(n-m) outside it.
        const Rat inside = (Rat(1) - eps * Rat(m - 2)) / Rat(m - 1);
        const Rat outside = eps * Rat(m) / Rat(n - m);
        for (int k = 1; k <= n; ++k) {
            Rat& c = coords[static_cast<std::size_t>(k - 1)];
            if (k == j) {
                c = -(eps + eps);
            } else if (circuit.contains(k)) {
                c = inside;
            } else {
                c = outside;
            }
        }
    }
    return RPoint(std::move(coords));
}

ConstructionOutput build(const IndependenceSystem& system) {
    const int n = system.ground_size();

    std::vector<RPoint> generators;
    std::vector<std::string> labels;
    std::vector<int> vertex_positions;
    for (int j = 1; j <= n; ++j) {
        vertex_positions.push_back(static_cast<int>(generators.size()));
        generators.push_back(simplex_vertex(j, n));
        labels.push_back("s" + std::to_string(j));
    }

    std::map<std::pair<IndexSubset, int>, int> ruin_positions;
    if (n >= 2) {
        for (const IndexSubset& circuit : system.circuits()) {
            for (int j : circuit.elements()) {
                ruin_positions[{circuit, j}] = static_cast<int>(generators.size());
                generators.push_back(ruin_point(circuit, j, n));

                std::string label = "q_{";
                bool first = true;
                for (int e : circuit.elements()) {
                    if (!first) label += ",";
                    label += std::to_string(e);
                    first = false;
                }
                label += "}^" + std::to_string(j);
                labels.push_back(std::move(label));
            }
        }
    }

    return ConstructionOutput{
        StateSpace(n, std::move(generators), std::move(labels)),
        std::move(vertex_positions),
        std::move(ruin_positions),
        Rat(1, 3L * n * n),
    };
}

}  // namespace gptd
