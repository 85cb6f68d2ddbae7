# Ficheiro intencionalmente vazio.
# Transforma 'resolutions' num sub-pacote de 'aug_cohomology'.
