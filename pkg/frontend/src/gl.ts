/**
 * WebGL2 path for the distortion pipeline. The fragment shader mirrors
 * distortion.ts texel-for-texel: nearest fetches, clamp-to-edge, shift
 * then bubble displacement composed as shifted(p - m) = in(p - m - off).
 * main.ts falls back to the CPU reference when WebGL2 is unavailable,
 * so this file is browser-only and the tests exercise the CPU twin.
 */

import type { DistortionInput } from './distortion.js';

export const MAX_BUBBLES = 16;

export const VERTEX_SRC = `#version 300 es
in vec2 aPos;
void main() {
  gl_Position = vec4(aPos, 0.0, 1.0);
}`;

export const FRAGMENT_SRC = `#version 300 es
precision highp float;
uniform sampler2D uFrame;
uniform vec2 uROffset;
uniform vec2 uGOffset;
uniform vec2 uBOffset;
uniform int uBubbleCount;
uniform vec3 uBubbles[${MAX_BUBBLES}];
uniform vec2 uPhase;
uniform float uGain;
uniform float uWobble;
out vec4 outColor;

float fetchChannel(vec2 pos, int channel) {
  ivec2 size = textureSize(uFrame, 0);
  ivec2 p = ivec2(clamp(vec2(round(pos.x), round(pos.y)),
                        vec2(0.0), vec2(size) - 1.0));
  vec4 texel = texelFetch(uFrame, p, 0);
  return channel == 0 ? texel.r : channel == 1 ? texel.g : texel.b;
}

vec3 shiftedAt(vec2 p) {
  return vec3(fetchChannel(p - uROffset, 0),
              fetchChannel(p - uGOffset, 1),
              fetchChannel(p - uBOffset, 2));
}

void main() {
  vec2 p = floor(gl_FragCoord.xy);
  vec2 samplePos = p;
  for (int i = 0; i < ${MAX_BUBBLES}; i++) {
    if (i >= uBubbleCount) break;
    vec2 d = p - uBubbles[i].xy;
    float r = uBubbles[i].z;
    if (dot(d, d) <= r * r) {
      float angle = atan(d.y, d.x);
      float wx = (1.0 + sin(2.0 * angle + uWobble)) / 2.0;
      float wy = (1.0 + cos(3.0 * angle + uWobble)) / 2.0;
      samplePos = p - uGain * uPhase * vec2(wx, wy);
      break;
    }
  }
  outColor = vec4(shiftedAt(samplePos), 1.0);
}`;

export interface GlPipeline {
  render(source: TexImageSource, input: DistortionInput): void;
}

function compile(gl: WebGL2RenderingContext, type: number, src: string): WebGLShader {
  const shader = gl.createShader(type)!;
  gl.shaderSource(shader, src);
  gl.compileShader(shader);
  if (!gl.getShaderParameter(shader, gl.COMPILE_STATUS)) {
    throw new Error(`shader compile failed: ${gl.getShaderInfoLog(shader)}`);
  }
  return shader;
}

/** Build the pipeline, or return null when WebGL2 is unavailable. */
export function createGlPipeline(canvas: HTMLCanvasElement): GlPipeline | null {
  const gl = canvas.getContext('webgl2');
  if (!gl) return null;

  const program = gl.createProgram()!;
  gl.attachShader(program, compile(gl, gl.VERTEX_SHADER, VERTEX_SRC));
  gl.attachShader(program, compile(gl, gl.FRAGMENT_SHADER, FRAGMENT_SRC));
  gl.linkProgram(program);
  if (!gl.getProgramParameter(program, gl.LINK_STATUS)) {
    throw new Error(`program link failed: ${gl.getProgramInfoLog(program)}`);
  }
  gl.useProgram(program);

  const quad = gl.createBuffer();
  gl.bindBuffer(gl.ARRAY_BUFFER, quad);
  gl.bufferData(
    gl.ARRAY_BUFFER,
    new Float32Array([-1, -1, 3, -1, -1, 3]),
    gl.STATIC_DRAW,
  );
  const aPos = gl.getAttribLocation(program, 'aPos');
  gl.enableVertexAttribArray(aPos);
  gl.vertexAttribPointer(aPos, 2, gl.FLOAT, false, 0, 0);

  const texture = gl.createTexture();
  gl.bindTexture(gl.TEXTURE_2D, texture);
  gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_MIN_FILTER, gl.NEAREST);
  gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_MAG_FILTER, gl.NEAREST);
  gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_WRAP_S, gl.CLAMP_TO_EDGE);
  gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_WRAP_T, gl.CLAMP_TO_EDGE);
  // Match CPU pixel coordinates: row 0 at the top.
  gl.pixelStorei(gl.UNPACK_FLIP_Y_WEBGL, true);

  const loc = (name: string) => gl.getUniformLocation(program, name);
  const bubbleData = new Float32Array(MAX_BUBBLES * 3);

  return {
    render(source: TexImageSource, input: DistortionInput): void {
      gl.viewport(0, 0, canvas.width, canvas.height);
      gl.bindTexture(gl.TEXTURE_2D, texture);
      gl.texImage2D(gl.TEXTURE_2D, 0, gl.RGBA, gl.RGBA, gl.UNSIGNED_BYTE, source);

      const [r, g, b] = input.rgbOffsets;
      gl.uniform2f(loc('uROffset'), r[0], r[1]);
      gl.uniform2f(loc('uGOffset'), g[0], g[1]);
      gl.uniform2f(loc('uBOffset'), b[0], b[1]);
      gl.uniform2f(loc('uPhase'), input.displacementPhase[0], input.displacementPhase[1]);
      gl.uniform1f(loc('uGain'), input.gain);
      gl.uniform1f(loc('uWobble'), input.wobble);

      const count = Math.min(input.bubbles.length, MAX_BUBBLES);
      bubbleData.fill(0);
      for (let i = 0; i < count; i++) {
        const bubble = input.bubbles[i];
        bubbleData[i * 3] = bubble.centerX;
        // GL's y axis points up; bubble centers arrive in top-down pixels.
        bubbleData[i * 3 + 1] = canvas.height - 1 - bubble.centerY;
        bubbleData[i * 3 + 2] = bubble.radiusPx;
      }
      gl.uniform1i(loc('uBubbleCount'), count);
      gl.uniform3fv(loc('uBubbles'), bubbleData);

      gl.drawArrays(gl.TRIANGLES, 0, 3);
    },
  };
}
