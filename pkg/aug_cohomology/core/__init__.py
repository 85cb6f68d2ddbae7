# Ficheiro intencionalmente vazio.
# Transforma 'core' num sub-pacote de 'aug_cohomology'.
