// SPDX-License-Identifier: Apache-2.0
//
// simris - channel simulator for RIS-assisted mmWave links
// Copyright (C) 2026 simris contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "simris/service.hpp"

namespace simris
{
    const std::string &service_schema_text()
    {
        static const std::string text = R"json({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "$id": "simris-service",
  "title": "simris service API",
  "schema_version": "1.0",
  "$defs": {
    "point": {
      "type": "array",
      "items": { "type": "number" },
      "minItems": 3,
      "maxItems": 3,
      "description": "x, y, z in meters"
    },
    "rule": { "enum": ["off", "random", "optimal"] },
    "seed": {
      "oneOf": [{ "type": "integer", "minimum": 0 }, { "type": "string", "pattern": "^[0-9]+$" }],
      "description": "64-bit master seed; the decimal string form avoids precision loss in JavaScript"
    },
    "scenario": {
      "type": "object",
      "required": ["environment", "frequency_ghz", "wall", "tx", "rx", "ris"],
      "additionalProperties": false,
      "properties": {
        "environment": { "enum": ["inh", "umi"] },
        "frequency_ghz": { "enum": [28, 73] },
        "wall": { "enum": ["side", "opposite"] },
        "tx": { "$ref": "#/$defs/point" },
        "rx": { "$ref": "#/$defs/point" },
        "ris": { "$ref": "#/$defs/point" },
        "elements": { "type": "integer", "minimum": 1, "default": 256 },
        "element_spacing_m": { "type": "number", "exclusiveMinimum": 0 },
        "direct_link": { "type": "boolean", "default": true }
      }
    },
    "simulation": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "realizations": { "type": "integer", "minimum": 1, "maximum": 10000, "default": 1 },
        "seed": { "$ref": "#/$defs/seed" },
        "wavefront": { "enum": ["auto", "planar", "spherical"] },
        "los_mode": { "enum": ["stochastic", "always", "never"] },
        "scattering": { "type": "boolean" },
        "shadowing": { "type": "boolean" },
        "element_gain": { "type": "number", "exclusiveMinimum": 0 }
      }
    },
    "link": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "tx_power_dbw": { "type": "array", "items": { "type": "number" } },
        "noise_dbm": { "type": "number", "default": -100 },
        "tx_gain": { "type": "number", "exclusiveMinimum": 0, "description": "linear" },
        "rx_gain": { "type": "number", "exclusiveMinimum": 0, "description": "linear" },
        "efficiency": { "type": "number", "exclusiveMinimum": 0, "maximum": 1 },
        "rules": { "type": "array", "items": { "$ref": "#/$defs/rule" } }
      }
    },
    "pathloss": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "los_exponent": { "type": "number" },
        "los_sigma_db": { "type": "number", "minimum": 0 },
        "nlos_exponent": { "type": "number" },
        "nlos_sigma_db": { "type": "number", "minimum": 0 }
      }
    },
    "clusters": {
      "type": "object",
      "additionalProperties": false,
      "properties": {
        "mean_count": { "type": "number", "exclusiveMinimum": 0 },
        "max_subrays": { "type": "integer", "minimum": 1 },
        "azimuth_spread_deg": { "type": "number", "minimum": 0 },
        "elevation_spread_deg": { "type": "number", "minimum": 0 },
        "subray_spread_deg": { "type": "number", "minimum": 0 }
      }
    },
    "violation": {
      "type": "object",
      "required": ["code", "message"],
      "properties": { "code": { "type": "string" }, "message": { "type": "string" } }
    },
    "violations": { "type": "array", "items": { "$ref": "#/$defs/violation" } },
    "rate_report": {
      "type": "object",
      "required": ["mean_rate", "rate_std", "rate_stderr", "mean_snr_db", "count", "tx_power_dbm", "noise_dbm"],
      "properties": {
        "mean_rate": { "type": "number", "description": "bits/s/Hz" },
        "rate_std": { "type": "number" },
        "rate_stderr": { "type": "number" },
        "mean_snr_db": { "type": ["number", "null"], "description": "null when every gain is zero" },
        "count": { "type": "integer" },
        "tx_power_dbm": { "type": "number" },
        "noise_dbm": { "type": "number" }
      }
    },
    "error": {
      "type": "object",
      "required": ["schema_version", "error"],
      "properties": {
        "schema_version": { "const": "1.0" },
        "error": {
          "type": "object",
          "required": ["code", "message", "violations"],
          "properties": {
            "code": { "enum": ["INVALID_JSON", "CONFIG_ERROR", "SCENARIO_INVALID", "LIMIT_EXCEEDED", "NOT_FOUND", "HTTP_ERROR", "INTERNAL_ERROR"] },
            "message": { "type": "string" },
            "key": { "type": "string", "description": "offending field, section.key" },
            "violations": { "$ref": "#/$defs/violations" }
          }
        }
      }
    },
    "config_sections": {
      "type": "object",
      "required": ["scenario"],
      "properties": {
        "scenario": { "$ref": "#/$defs/scenario" },
        "simulation": { "$ref": "#/$defs/simulation" },
        "link": { "$ref": "#/$defs/link" },
        "pathloss": { "$ref": "#/$defs/pathloss" },
        "clusters": { "$ref": "#/$defs/clusters" }
      }
    }
  },
  "endpoints": {
    "POST /validate": {
      "request": { "$ref": "#/$defs/config_sections" },
      "response": {
        "type": "object",
        "required": ["schema_version", "valid", "violations", "config"],
        "properties": {
          "schema_version": { "const": "1.0" },
          "valid": { "type": "boolean" },
          "violations": { "$ref": "#/$defs/violations" },
          "config": { "$ref": "#/$defs/config_sections" }
        }
      }
    },
    "POST /simulate": {
      "request": {
        "allOf": [{ "$ref": "#/$defs/config_sections" }],
        "properties": {
          "profile_rule": { "oneOf": [{ "$ref": "#/$defs/rule" }, { "type": "array", "items": { "$ref": "#/$defs/rule" } }] },
          "histogram_bins": { "type": "integer", "minimum": 0, "maximum": 1000 }
        }
      },
      "response": {
        "type": "object",
        "required": ["schema_version", "config", "seed", "seed_text", "violations", "reports"],
        "properties": {
          "schema_version": { "const": "1.0" },
          "config": { "$ref": "#/$defs/config_sections" },
          "seed": { "type": "integer" },
          "seed_text": { "type": "string" },
          "violations": { "$ref": "#/$defs/violations" },
          "reports": {
            "type": "array",
            "items": {
              "allOf": [{ "$ref": "#/$defs/rate_report" }],
              "properties": {
                "rule": { "$ref": "#/$defs/rule" },
                "tx_power_dbw": { "type": "number" },
                "histogram": {
                  "type": "object",
                  "properties": {
                    "bin_edges_db": { "type": "array", "items": { "type": "number" } },
                    "counts": { "type": "array", "items": { "type": "integer" } },
                    "zero_gain_count": { "type": "integer" }
                  }
                }
              }
            }
          }
        }
      }
    },
    "POST /heatmap": {
      "request": {
        "allOf": [{ "$ref": "#/$defs/config_sections" }],
        "required": ["grid"],
        "properties": {
          "grid": {
            "type": "object",
            "required": ["x", "y"],
            "properties": {
              "x": { "type": "array", "items": { "type": "number" }, "minItems": 1, "maxItems": 64 },
              "y": { "type": "array", "items": { "type": "number" }, "minItems": 1, "maxItems": 64 }
            }
          },
          "profile_rule": { "$ref": "#/$defs/rule" },
          "tx_power_dbw": { "type": "number", "default": 0 }
        }
      },
      "response": {
        "type": "object",
        "required": ["schema_version", "job_id", "status", "progress"],
        "properties": {
          "schema_version": { "const": "1.0" },
          "job_id": { "type": "string" },
          "status": { "const": "running" },
          "progress": { "type": "object", "properties": { "done": { "type": "integer" }, "total": { "type": "integer" } } }
        }
      }
    },
    "GET /heatmap/{id}": {
      "response": {
        "type": "object",
        "required": ["schema_version", "job_id", "status", "progress"],
        "properties": {
          "schema_version": { "const": "1.0" },
          "job_id": { "type": "string" },
          "status": { "enum": ["running", "done", "failed", "cancelled"] },
          "progress": { "type": "object", "properties": { "done": { "type": "integer" }, "total": { "type": "integer" } } },
          "result": {
            "type": "object",
            "description": "present when status is done; cells are row-major, index = iy * len(x) + ix",
            "properties": {
              "grid": { "type": "object", "properties": { "x": { "type": "array" }, "y": { "type": "array" } } },
              "profile_rule": { "$ref": "#/$defs/rule" },
              "tx_power_dbw": { "type": "number" },
              "config": { "$ref": "#/$defs/config_sections" },
              "cells": {
                "type": "array",
                "items": {
                  "type": "object",
                  "properties": {
                    "ix": { "type": "integer" },
                    "iy": { "type": "integer" },
                    "x": { "type": "number" },
                    "y": { "type": "number" },
                    "seed": { "type": "integer" },
                    "seed_text": { "type": "string", "description": "seed of an equivalent /simulate request for this cell" },
                    "report": { "$ref": "#/$defs/rate_report" }
                  }
                }
              }
            }
          }
        }
      }
    },
    "GET /recommend?environment={inh|umi}&wall={side|opposite}": {
      "response": {
        "type": "object",
        "required": ["schema_version", "config"],
        "properties": { "schema_version": { "const": "1.0" }, "config": { "$ref": "#/$defs/config_sections" } }
      }
    },
    "GET /schema": { "response": { "description": "this document" } },
    "errors": { "$ref": "#/$defs/error" }
  }
}
)json";
        return text;
    }
}
