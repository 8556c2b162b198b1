public abstract class Abstract13 extends State {
}
