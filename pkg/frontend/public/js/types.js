/** Payload shapes of the atlas JSON API. */
export function emptyFilter() {
    return { problemTags: new Set(), reductionTags: new Set() };
}
export function filterIsEmpty(filter) {
    return filter.problemTags.size === 0 && filter.reductionTags.size === 0;
}
//# sourceMappingURL=types.js.map