public abstract class Abstract4 extends Abstract3 {
}
