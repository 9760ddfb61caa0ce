/**
 * No API schema drift: client request payloads and expected job responses
 * are validated against the JSON schemas checked in at ../schema/, the same
 * files the server test suite validates its pydantic models against.
 */

import { readFileSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";
import { ApiClient } from "../src/api.js";
import { CanvasSession } from "../src/session.js";
import type { SceneDetail } from "../src/types.js";

type Schema = Record<string, any>;

function loadSchema(name: string): Schema {
  return JSON.parse(readFileSync(join(__dirname, "..", "..", "schema", name), "utf8"));
}

/** Minimal JSON-schema walker covering the subset our schemas use. */
function validate(value: unknown, schema: Schema, path = "$"): string[] {
  const errors: string[] = [];
  const types = Array.isArray(schema.type) ? schema.type : schema.type ? [schema.type] : [];
  if (types.length > 0) {
    const ok = types.some((t: string) => {
      if (t === "object") return typeof value === "object" && value !== null && !Array.isArray(value);
      if (t === "array") return Array.isArray(value);
      if (t === "string") return typeof value === "string";
      if (t === "integer") return typeof value === "number" && Number.isInteger(value);
      if (t === "number") return typeof value === "number" && Number.isFinite(value);
      if (t === "null") return value === null;
      return false;
    });
    if (!ok) {
      errors.push(`${path}: expected ${types.join("|")}`);
      return errors;
    }
  }
  if (schema.enum && !schema.enum.includes(value)) {
    errors.push(`${path}: ${JSON.stringify(value)} not in enum`);
  }
  if (typeof value === "string" && schema.minLength && value.length < schema.minLength) {
    errors.push(`${path}: shorter than ${schema.minLength}`);
  }
  if (typeof value === "number" && schema.minimum !== undefined && value < schema.minimum) {
    errors.push(`${path}: below minimum ${schema.minimum}`);
  }
  if (Array.isArray(value)) {
    if (schema.minItems !== undefined && value.length < schema.minItems) {
      errors.push(`${path}: fewer than ${schema.minItems} items`);
    }
    if (schema.maxItems !== undefined && value.length > schema.maxItems) {
      errors.push(`${path}: more than ${schema.maxItems} items`);
    }
    if (schema.items) {
      value.forEach((v, i) => errors.push(...validate(v, schema.items, `${path}[${i}]`)));
    }
  } else if (typeof value === "object" && value !== null) {
    const obj = value as Record<string, unknown>;
    for (const req of schema.required ?? []) {
      if (!(req in obj)) errors.push(`${path}: missing required ${req}`);
    }
    for (const [key, v] of Object.entries(obj)) {
      const sub = schema.properties?.[key];
      if (sub) {
        errors.push(...validate(v, sub, `${path}.${key}`));
      } else if (schema.additionalProperties === false) {
        errors.push(`${path}: unexpected property ${key}`);
      }
    }
  }
  return errors;
}

const scene: SceneDetail = {
  id: "s0",
  height: 4,
  width: 4,
  length: 8,
  first_frame_uri: "/api/scenes/s0/frame.png",
  masks: [{ entity_id: 0, rle: { size: [4, 4], counts: [5, 1, 10] } }],
  incircle_centers: [[1.5, 1.5]],
  incircle_radii: [1],
};

describe("schema drift", () => {
  it("the session's request payload validates against the shared schema", () => {
    const s = new CanvasSession(scene, new ApiClient(""));
    s.select([1.5, 1.5]);
    s.startDrag([1.5, 1.5]);
    s.extendDrag([3.0, 2.0]);
    s.endDrag();
    const payload = { scene_id: scene.id, trajectories: s.buildRequest(), seed: 0 };
    const errors = validate(payload, loadSchema("generate_request.schema.json"));
    expect(errors).toEqual([]);
  });

  it("rejects drifted payloads", () => {
    const schema = loadSchema("generate_request.schema.json");
    expect(validate({ trajectories: [] }, schema)).not.toEqual([]);
    expect(
      validate(
        { scene_id: "s0", trajectories: [{ entity_id: 0, points: [[1]] }] },
        schema,
      ),
    ).not.toEqual([]);
    expect(
      validate(
        { scene_id: "s0", trajectories: [{ entity_id: 0, points: [[1, 2]] }], bogus: 1 },
        schema,
      ),
    ).not.toEqual([]);
  });

  it("the job shape the client consumes validates against the job schema", () => {
    const job = {
      id: "abc123",
      kind: "generate",
      state: "done",
      request: { scene_id: "s0" },
      artifacts: ["/api/jobs/abc123/frames/0"],
      timing: { created: 1.0, started: 2.0, finished: 3.0 },
      error: null,
      resampled: [{ entity_id: 0, points: [[1.0, 2.0]] }],
    };
    expect(validate(job, loadSchema("job.schema.json"))).toEqual([]);
    expect(validate({ ...job, state: "exploded" }, loadSchema("job.schema.json"))).not.toEqual([]);
  });
});
