#pragma once

#include <string>

#include "pdc/fock.hpp"
#include "pdc/hamiltonian.hpp"

namespace pdc::observables {

ObservableSpec identity();
ObservableSpec photon_number_1();  // "n1"
ObservableSpec photon_number_2();  // "n2"
ObservableSpec charge();           // "R" = n1 + 2 n2
ObservableSpec parity();           // "parity": projector onto odd n1
ObservableSpec hamiltonian(const ModelParams& params);  // "H"

// Finite-support observable from a JSON table:
//   {"name": ..., "hermitian": true,
//    "entries": [{"n1": .., "n2": .., "n1p": .., "n2p": .., "re": .., "im": ..}, ...]}
// Each entry gives <n1p, n2p| X |n1, n2>. With hermitian = true the conjugate
// transpose entries are implied and must not also be listed.
ObservableSpec from_table_json(const std::string& text);
ObservableSpec from_table_file(const std::string& path);

// Resolve a CLI observable name: one of n1, n2, R, parity, H, or "@path"
// pointing at a table file. Throws std::invalid_argument on unknown names.
ObservableSpec by_name(const std::string& name, const ModelParams& params);

}  // namespace pdc::observables
