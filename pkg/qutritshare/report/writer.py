# Copyright 2026 The qutritshare Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
This module is used to write report documents as text tables or as a JSON document.
"""
import json
import logging

from ..data.parameters import OutputFormat


def dump_structured(document, stream):
    """ Write a document as one JSON document followed by a newline. """
    json.dump(document, stream, indent=4, separators=(',', ': '))
    stream.write("\n")


def _complex_text(pair):
    re, im = pair
    return "%.6f%+.6fi" % (re, im)


class ReportWriter(object):
    """ The ReportWriter class writes a report document in the selected output format.

        Attributes:
            output_format (str): One of OutputFormat.names.
    """

    def __init__(self, output_format=OutputFormat.HUMAN):
        self.output_format = output_format
        self._logger = logging.getLogger(__name__)

    def write(self, document, stream):
        """ Write a document to a stream.

            Arguments:
                document (Dict): A report document returned by Runner.
                stream (file): The output stream, normally standard output.
        """
        if self.output_format == OutputFormat.STRUCTURED:
            dump_structured(document, stream)
            return
        writers = {"simulate": self._write_simulate, "classify": self._write_classify,
                   "table1": self._write_table1, "bases": self._write_bases}
        lines = writers[document["command"]](document)
        stream.write("\n".join(lines) + "\n")

    def _write_simulate(self, doc):
        lines = ["Scheme %s, seed %d" % (doc["scheme"], doc["seed"]),
                 "U (%s):" % doc["u"]["name"]]
        for row in doc["u"]["matrix"]:
            lines.append("    " + "  ".join(_complex_text(z) for z in row))
        lines.append("chi: " + "  ".join(_complex_text(z) for z in doc["chi"]["amplitudes"]))
        if doc["basis"] is not None:
            lines.append("basis: %s, declared: %s" % (doc["basis"], doc["declared"] or "none"))
        lines.append("")
        lines.append("%-36s %-10s %-22s %-8s %-8s %s" % ("outcome path", "p", "messages", "rule", "oracle",
                                                         "fidelity"))
        for b in doc["branches"]:
            path = " ".join("%s=%s" % (step["measurement"], step["outcome"]) for step in b["path"])
            messages = " ".join("%s>%s:%s" % (m["from"][0], "".join(r[0] for r in m["to"]),
                                              "".join(str(t) for t in m["trits"])) for m in b["messages"])
            lines.append("%-36s %-10s %-22s %-8s %-8s %.12f" % (path, b["probability"], messages,
                                                               b["protocol_success"], b["oracle_success"],
                                                               b["fidelity"]))
        lines.append("")
        lines.append("branches: %d, total probability: %s" % (doc["branch_count"], doc["total_probability"]))
        lines.append("nominal P: %s" % doc["nominal_success_probability"])
        lines.append("exact P: %s" % doc["success_probability"])
        if doc["min_success_fidelity"] is not None:
            lines.append("lowest fidelity of declared successes: %.12f" % doc["min_success_fidelity"])
        lines.append("unsupported claims: %d" % doc["unsupported_claims"])
        if "resources" in doc:
            r = doc["resources"]
            lines.append("resources: QRC %s | NO %s | Q_t %d | C_t %d | P %s | eta %s" %
                         (r["QRC"], r["NO"], r["Q_t"], r["C_t"], r["P"], r["eta"]))
        for sample in doc.get("samples", []):
            lines.append("sample branch %d: %s -> %s" % (sample["branch"], sample["path"],
                                                       "success" if sample["oracle_success"] else "failure"))
            lines.append("    trace: %s" % ", ".join(sample["trace"]))
            lines.append("    messages: %s" % ", ".join(sample["messages"]))
        for problem in doc["problems"]:
            lines.append("problem: %s" % problem)
        lines.append("status: %s" % doc["status"])
        return lines

    def _write_classify(self, doc):
        lines = ["U (%s), unitarity residual %.3e:" % (doc["u"]["name"], doc["u"]["unitarity_residual"])]
        for row in doc["u"]["matrix"]:
            lines.append("    " + "  ".join(_complex_text(z) for z in row))
        lines.append("memberships: %s" % (", ".join(doc["memberships"]) or "none"))
        lines.append("%-6s %-24s %s" % ("case", "commutation signs", "predicted P"))
        for case_id, signs in doc["commutation"].items():
            text = ", ".join("%s %s" % (name, sign) for name, sign in signs.items())
            lines.append("%-6s %-24s %s" % (case_id, text, doc["predicted_probability"][case_id]))
        return lines

    def _write_table1(self, doc):
        header = ("%-6s %-22s %-8s %-22s %-9s %-5s %-5s %-6s %-10s %s" %
                  ("scheme", "operation", "QRC", "NO", "CRC", "P", "eta", "Q_t", "exact P", "check"))
        lines = ["Scheme comparison (seed %d)" % doc["seed"], header]
        for row in doc["rows"]:
            if "P" not in row:
                lines.append("%-6s %-22s %s" % (row["scheme"], row["operation"], row["status"]))
                continue
            lines.append("%-6s %-22s %-8s %-22s %-9s %-5s %-5s %-6d %-10s %s" %
                         (row["scheme"], row["operation"], row["QRC"], row["NO"], row["CRC"], row["P"],
                          row["eta"], row["Q_t"], row["exact_P"], row["status"]))
        lines.append("status: %s" % doc["status"])
        return lines

    def _write_bases(self, doc):
        lines = []
        for case in doc["cases"]:
            lines.append("%s: x1 = %s, y1 = %s%s" % (case["case"], _complex_text(case["x1"]), _complex_text(case["y1"]),
                                                     " (xi2 completed by cross product)"
                                                     if case["completed_by_cross_product"] else ""))
            for label, vector in case["vectors"].items():
                lines.append("    %-4s %s" % (label, "  ".join(_complex_text(z) for z in vector)))
            lines.append("    orthonormality residual %.3e" % case["orthonormality_residual"])
            for name, w in case["W"].items():
                lines.append("    %-8s diag(%s)  %s" % (name, ", ".join(_complex_text(z) for z in w["diagonal"]),
                                                      "scaled unitary" if w["scaled_unitary"] else "not unitary"))
        return lines
