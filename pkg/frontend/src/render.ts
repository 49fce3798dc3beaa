import { BoardView, arityError, canSubmit, deletionPreview } from './state'
import { OutcomeDetail } from './types'

function escapeHtml(s: string): string {
  return s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;')
}

/** One row of clickable vertices per path component. A selected vertex and
 * the neighbours it would take with it are highlighted as the preview. */
export function renderBoard(view: BoardView): string {
  const rows = view.position.map((length, idx) => {
    const selected = view.pending.get(idx)
    const cells: string[] = []
    for (let v = 1; v <= length; v++) {
      const classes = ['vertex']
      if (selected !== undefined && Math.abs(v - selected) <= 1) {
        classes.push(v === selected ? 'selected' : 'preview-deleted')
      }
      cells.push(
        `<button class="${classes.join(' ')}" data-component="${idx}" ` +
          `data-vertex="${v}">${v}</button>`,
      )
    }
    const preview =
      selected === undefined
        ? ''
        : ` <span class="preview">&rarr; ${
            deletionPreview(length, selected).join(' + ') || 'empty'
          }</span>`
    return `<div class="component" data-component="${idx}">` +
      `<span class="label">P<sub>${length}</sub></span>${cells.join('')}${preview}</div>`
  })
  if (rows.length === 0) rows.push('<div class="component empty">no vertices left</div>')
  const frozen = view.status === 'finished' ? ' frozen' : ''
  return `<div class="board${frozen}">${rows.join('')}</div>`
}

export function renderSubmit(view: BoardView): string {
  const err = arityError(view)
  const disabled = canSubmit(view) ? '' : ' disabled'
  const hint = err && view.pending.size > 0 ? `<span class="hint">${escapeHtml(err)}</span>` : ''
  return `<button id="submit"${disabled}>Submit</button>${hint}`
}

/** Analysis sidebar showing the variant's per-component values. */
export function renderAnalysis(outcome: 'P' | 'N', detail: OutcomeDetail): string {
  const lines: string[] = [`<div class="outcome outcome-${outcome}">${outcome}</div>`]
  if (detail.rho) lines.push(`<div>&rho;: ${detail.rho.join(', ')} (xor ${detail.rho_xor})</div>`)
  if (detail.f) lines.push(`<div>F: ${detail.f.join(', ')}</div>`)
  if (detail.remoteness !== undefined) lines.push(`<div>R: ${detail.remoteness}</div>`)
  if (detail.suspense !== undefined) lines.push(`<div>S: ${detail.suspense}</div>`)
  if (detail.sigma) lines.push(`<div>&sigma;: ${detail.sigma.join('')}</div>`)
  if (detail.source) lines.push(`<div>source: ${escapeHtml(detail.source)}</div>`)
  return `<div class="analysis">${lines.join('')}</div>`
}

export function renderBanner(text: string): string {
  return text ? `<div class="banner">${escapeHtml(text)}</div>` : ''
}
