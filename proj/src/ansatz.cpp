#include "mubvqe/ansatz.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mubvqe {

namespace {

Gate rotation(GateKind kind, int qubit, int slot) {
  Gate g;
  g.kind = kind;
  g.q0 = qubit;
  g.slot = slot;
  return g;
}

Gate evolution(std::string_view word, int slot) {
  Gate g;
  g.kind = GateKind::PauliEvolution;
  g.generator = PauliWord::from_string(word);
  g.slot = slot;
  return g;
}

}  // namespace

Circuit efficient_su2(int n_qubits, int reps, Entanglement entanglement,
                      bool final_rotation_layer) {
  if (n_qubits < 1) {
    throw std::invalid_argument("efficient-su2 needs at least one qubit");
  }
  if (reps < 1) {
    throw std::invalid_argument("efficient-su2 needs reps >= 1");
  }
  Circuit c;
  c.n_qubits = n_qubits;
  int slot = 0;
  auto rotation_layer = [&](GateKind kind) {
    for (int q = 0; q < n_qubits; ++q) {
      c.gates.push_back(rotation(kind, q, slot++));
    }
  };
  auto cx = [&](int control, int target) {
    Gate g;
    g.kind = GateKind::CX;
    g.q0 = control;
    g.q1 = target;
    c.gates.push_back(g);
  };
  rotation_layer(GateKind::RY);
  rotation_layer(GateKind::RZ);
  for (int r = 0; r < reps; ++r) {
    if (entanglement == Entanglement::Linear) {
      for (int q = 0; q + 1 < n_qubits; ++q) cx(q, q + 1);
    } else {
      for (int a = 0; a < n_qubits; ++a) {
        for (int b = a + 1; b < n_qubits; ++b) cx(a, b);
      }
    }
    if (r + 1 < reps || final_rotation_layer) {
      rotation_layer(GateKind::RY);
      rotation_layer(GateKind::RZ);
    }
  }
  c.n_params = slot;
  validate(c);
  return c;
}

Circuit uccsd_2q() {
  Circuit c;
  c.n_qubits = 2;
  c.n_params = 3;
  c.gates.push_back(evolution("IY", 0));
  c.gates.push_back(evolution("YI", 1));
  c.gates.push_back(evolution("XY", 2));
  c.gates.push_back(evolution("YX", 2));
  validate(c);
  return c;
}

Circuit parse_ansatz_file(std::string_view text) {
  Circuit c;
  bool have_header = false;
  int max_slot = -1;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  auto fail = [&](const std::string& what) -> std::invalid_argument {
    return std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                 what);
  };
  auto parse_int = [&](const std::string& token, const char* what) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return v;
    } catch (const std::exception&) {
      throw fail(std::string("bad ") + what + " '" + token + "'");
    }
  };
  auto check_qubit = [&](int q) {
    if (q < 0 || q >= c.n_qubits) {
      throw fail("qubit " + std::to_string(q) + " out of range for " +
                 std::to_string(c.n_qubits) + " qubits");
    }
  };
  auto note_slot = [&](int slot) {
    if (slot < 0) throw fail("negative parameter slot");
    max_slot = std::max(max_slot, slot);
  };

  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string line(text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::string op;
    if (!(fields >> op)) continue;

    if (!have_header) {
      if (op != "qubits") throw fail("expected `qubits <n>` header");
      std::string n_token;
      if (!(fields >> n_token)) throw fail("missing qubit count");
      c.n_qubits = parse_int(n_token, "qubit count");
      if (c.n_qubits < 1 || c.n_qubits > 64) throw fail("bad qubit count");
      have_header = true;
      continue;
    }

    std::string a, b;
    if (op == "ry" || op == "rz") {
      if (!(fields >> a >> b)) throw fail("expected `" + op + " <q> <slot>`");
      const int q = parse_int(a, "qubit");
      const int slot = parse_int(b, "slot");
      check_qubit(q);
      note_slot(slot);
      c.gates.push_back(
          rotation(op == "ry" ? GateKind::RY : GateKind::RZ, q, slot));
    } else if (op == "cx") {
      if (!(fields >> a >> b)) throw fail("expected `cx <control> <target>`");
      Gate g;
      g.kind = GateKind::CX;
      g.q0 = parse_int(a, "control");
      g.q1 = parse_int(b, "target");
      check_qubit(g.q0);
      check_qubit(g.q1);
      if (g.q0 == g.q1) throw fail("cx control equals target");
      c.gates.push_back(g);
    } else if (op == "h" || op == "x" || op == "sdg") {
      if (!(fields >> a)) throw fail("expected `" + op + " <q>`");
      const int q = parse_int(a, "qubit");
      check_qubit(q);
      Gate g;
      g.kind = op == "h" ? GateKind::H
                         : (op == "x" ? GateKind::X : GateKind::Sdg);
      g.q0 = q;
      c.gates.push_back(g);
    } else if (op == "evo") {
      if (!(fields >> a >> b)) throw fail("expected `evo <word> <slot>`");
      const int slot = parse_int(b, "slot");
      note_slot(slot);
      Gate g;
      try {
        g = evolution(a, slot);
      } catch (const std::invalid_argument& e) {
        throw fail(e.what());
      }
      if (g.generator.n_qubits != c.n_qubits) {
        throw fail("word '" + a + "' has length " +
                   std::to_string(g.generator.n_qubits) + ", expected " +
                   std::to_string(c.n_qubits));
      }
      c.gates.push_back(g);
    } else {
      throw fail("unknown mnemonic '" + op + "'");
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing token '" + extra + "'");
  }

  if (!have_header) {
    throw std::invalid_argument("missing `qubits <n>` header");
  }
  c.n_params = max_slot + 1;
  try {
    validate(c);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("ansatz file: ") + e.what());
  }
  return c;
}

AnsatzSpec resolve_ansatz(const std::string& selector, int n_qubits,
                          int reps, Entanglement entanglement,
                          bool final_rotation_layer) {
  AnsatzSpec spec;
  spec.reps = reps;
  if (selector == "efficient-su2") {
    spec.name = selector;
    spec.n_qubits = n_qubits;
    spec.circuit =
        efficient_su2(n_qubits, reps, entanglement, final_rotation_layer);
  } else if (selector == "uccsd2") {
    if (n_qubits != 2) {
      throw std::invalid_argument("uccsd2 is a 2-qubit ansatz, problem has " +
                                  std::to_string(n_qubits) + " qubits");
    }
    spec.name = selector;
    spec.n_qubits = 2;
    spec.reps = 0;
    spec.circuit = uccsd_2q();
  } else if (selector.starts_with("file:")) {
    const std::string path = selector.substr(5);
    std::ifstream in(path);
    if (!in) {
      throw std::invalid_argument("cannot open ansatz file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    spec.name = selector;
    spec.reps = 0;
    spec.circuit = parse_ansatz_file(buffer.str());
    spec.n_qubits = spec.circuit.n_qubits;
    if (spec.n_qubits != n_qubits) {
      throw std::invalid_argument(
          "ansatz file is " + std::to_string(spec.n_qubits) +
          "-qubit, problem has " + std::to_string(n_qubits));
    }
  } else {
    throw std::invalid_argument(
        "unknown ansatz '" + selector +
        "' (expected efficient-su2, uccsd2, or file:<path>)");
  }
  return spec;
}

Entanglement parse_entanglement(std::string_view name) {
  if (name == "linear") return Entanglement::Linear;
  if (name == "full") return Entanglement::Full;
  throw std::invalid_argument("unknown entanglement '" + std::string(name) +
                              "' (linear, full)");
}

std::string_view entanglement_name(Entanglement entanglement) {
  return entanglement == Entanglement::Linear ? "linear" : "full";
}

}  // namespace mubvqe
